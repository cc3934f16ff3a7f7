/**
 * Integral simplicial homology with generator data.
 *
 * For each degree n the kernel of the boundary is presented by an integral
 * cycle basis; the image of the next boundary, rewritten in cycle
 * coordinates, is put in Smith normal form.  That decomposition yields Betti
 * numbers, torsion coefficients, and an explicit projection of any cycle to
 * its coordinates in the free quotient H_n / T_n -- enough to compute traces
 * of induced maps exactly.
 */

#pragma once

#include "fintop/int_matrix.hpp"
#include "fintop/poset.hpp"
#include "fintop/simplicial.hpp"
#include "fintop/smith.hpp"

#include <stdexcept>
#include <vector>

namespace fintop {

struct homology_degree {
    int cycle_rank = 0;    ///< rank of ker boundary_n
    int boundary_rank = 0; ///< rank of im boundary_{n+1} inside the cycle lattice
    int betti = 0;         ///< cycle_rank - boundary_rank
    std::vector<bigint> torsion; ///< invariant factors > 1

    int_matrix cycle_basis;            ///< ranks[n] x cycle_rank, saturated lattice basis
    smith_decomposition cycle_smith;   ///< decomposition of cycle_basis, for coordinates
    int_matrix quot_u;                 ///< U of smith(boundaries-in-cycle-coordinates)
    int_matrix quot_u_inv;
};

struct homology_data {
    std::vector<int> ranks;
    bool reduced = false;
    std::vector<homology_degree> deg;

    int max_dim() const noexcept { return static_cast<int>(deg.size()) - 1; }

    std::vector<int> betti() const
    {
        std::vector<int> b;
        for (const auto& d : deg)
            b.push_back(d.betti);
        return b;
    }

    bool has_torsion() const
    {
        for (const auto& d : deg)
            if (!d.torsion.empty())
                return true;
        return false;
    }
};

inline homology_data homology(const chain_complex& c)
{
    homology_data h;
    h.ranks = c.ranks;
    h.reduced = c.augmented;
    const int d = c.dim();
    h.deg.resize(d + 1);
    for (int n = 0; n <= d; ++n)
    {
        homology_degree& hd = h.deg[n];
        // kernel of boundary_n: the trailing columns of V in U*b*V = D
        smith_decomposition sb = smith(c.boundary[n]);
        const int k = c.ranks[n] - sb.rank;
        hd.cycle_rank = k;
        hd.cycle_basis = int_matrix(c.ranks[n], k);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < c.ranks[n]; ++i)
                hd.cycle_basis.at(i, j) = sb.v.at(i, sb.rank + j);
        hd.cycle_smith = smith(hd.cycle_basis);

        // image of boundary_{n+1} in cycle coordinates
        const int m = (n + 1 <= d) ? c.ranks[n + 1] : 0;
        int_matrix w(k, m);
        for (int j = 0; j < m; ++j)
        {
            auto col = solve(hd.cycle_smith, c.boundary[n + 1].column(j));
            if (!col)
                throw std::logic_error("homology: boundary image escapes the cycle lattice");
            for (int i = 0; i < k; ++i)
                w.at(i, j) = (*col)[i];
        }
        smith_decomposition sw = smith(w);
        hd.boundary_rank = sw.rank;
        hd.betti = k - sw.rank;
        for (int i = 0; i < sw.rank; ++i)
            if (sw.d.at(i, i) > 1)
                hd.torsion.push_back(sw.d.at(i, i));
        hd.quot_u = sw.u;
        hd.quot_u_inv = invert_unimodular(sw.u);
    }
    return h;
}

/** Betti/torsion of the order complex, unreduced. */
inline homology_data homology(const simplicial_complex& k)
{
    return homology(chain_complex_of(k, false));
}

inline homology_data homology(const poset& p)
{
    return homology(order_complex(p));
}

inline homology_data reduced_homology(const simplicial_complex& k)
{
    return homology(chain_complex_of(k, true));
}

/** Coordinates of a cycle in the degree-n cycle basis (must be a cycle). */
inline std::vector<bigint> cycle_coordinates(const homology_data& h, int n,
                                             const std::vector<bigint>& cycle)
{
    auto c = solve(h.deg.at(n).cycle_smith, cycle);
    if (!c)
        throw std::logic_error("cycle_coordinates: vector is not a cycle");
    c->resize(h.deg[n].cycle_rank);
    return *c;
}

/** Coordinates of a cycle's class in the free quotient H_n / T_n. */
inline std::vector<bigint> to_free_quotient(const homology_data& h, int n,
                                            const std::vector<bigint>& cycle)
{
    const homology_degree& hd = h.deg.at(n);
    std::vector<bigint> c = cycle_coordinates(h, n, cycle);
    std::vector<bigint> uc = hd.quot_u * c;
    return std::vector<bigint>(uc.begin() + hd.boundary_rank, uc.end());
}

/** A cycle representing the i-th free generator of H_n / T_n. */
inline std::vector<bigint> free_generator(const homology_data& h, int n, int i)
{
    const homology_degree& hd = h.deg.at(n);
    if (i < 0 || i >= hd.betti)
        throw std::invalid_argument("free_generator: index out of range");
    std::vector<bigint> e(hd.cycle_rank, 0);
    e[hd.boundary_rank + i] = 1;
    std::vector<bigint> coords = hd.quot_u_inv * e;
    return hd.cycle_basis * coords;
}

/**
 * Matrices of a chain map on the free quotients H_n / T_n, one per degree of
 * the target's range; degrees the source complex lacks contribute zero maps.
 */
inline std::vector<int_matrix> induced_on_free_quotient(const chain_map& phi,
                                                        const homology_data& src,
                                                        const homology_data& tgt)
{
    const int top = std::max(src.max_dim(), tgt.max_dim());
    std::vector<int_matrix> out(top + 1);
    for (int n = 0; n <= top; ++n)
    {
        const int bs = n <= src.max_dim() ? src.deg[n].betti : 0;
        const int bt = n <= tgt.max_dim() ? tgt.deg[n].betti : 0;
        int_matrix m(bt, bs);
        if (bs > 0 && bt > 0)
        {
            if (n > phi.dim())
                throw std::logic_error("induced_on_free_quotient: chain map misses a degree");
            for (int j = 0; j < bs; ++j)
            {
                std::vector<bigint> image = phi.at(n) * free_generator(src, n, j);
                std::vector<bigint> p = to_free_quotient(tgt, n, image);
                for (int i = 0; i < bt; ++i)
                    m.at(i, j) = p[i];
            }
        }
        out[n] = std::move(m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// acyclicity

/** Trivial reduced integral homology in all degrees (empty complexes fail). */
inline bool is_acyclic(const simplicial_complex& k)
{
    if (k.count(0) == 0)
        return false;
    homology_data h = reduced_homology(k);
    for (const auto& d : h.deg)
        if (d.betti != 0 || !d.torsion.empty())
            return false;
    return true;
}

/**
 * Acyclicity of a poset (or of an induced subposet).
 *
 * Beat points are stripped first; removing one preserves the homotopy type,
 * so a singleton core answers immediately and only beat-free cores reach the
 * boundary-matrix computation.
 */
inline bool is_acyclic(const poset& p)
{
    if (p.size() == 0)
        return false;
    poset c = core(p);
    if (c.size() == 1)
        return true;
    return is_acyclic(order_complex(c));
}

inline bool is_acyclic(const poset& p, const element_set& subset)
{
    if (subset.empty())
        return false;
    return is_acyclic(subposet(p, subset));
}

} // namespace fintop
