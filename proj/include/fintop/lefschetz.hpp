/**
 * Lefschetz numbers of multivalued self-maps, by two independent routes.
 *
 * Homology route: identify F with its graph in X x X; the first projection
 * induces isomorphisms on homology, so F_* = (p2)_* (p1)_*^{-1} is well
 * defined on every free quotient H_n / T_n, and L(F) is the alternating sum
 * of traces.  A map that is slsc instead of susc is routed through the
 * opposite order, where the identification K(X) = K(X^op) is the identity.
 *
 * Carrier route: the assignment sigma |-> K(F(max sigma)) is an acyclic
 * carrier; a chain map it carries is built dimension by dimension (vertices
 * to a canonical vertex, higher simplices by solving a boundary-filling
 * problem inside the carrier value), and L(F) is its Hopf trace.
 */

#pragma once

#include "fintop/homology.hpp"
#include "fintop/multimap.hpp"
#include "fintop/poset.hpp"
#include "fintop/simplicial.hpp"
#include "fintop/smith.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace fintop {

// ---------------------------------------------------------------------------
// acyclic carriers

/**
 * An acyclic carrier between order complexes whose values are vertex-induced
 * subcomplexes: simplex (d, i) of the source carries the subcomplex of the
 * target spanned by values[d][i].
 */
struct acyclic_carrier {
    simplicial_complex source;
    simplicial_complex target;
    poset target_space;
    std::vector<std::vector<element_set>> values;

    const element_set& value(int d, int i) const { return values.at(d).at(i); }
};

/** Carrier of a susc acyclic-valued self-map: sigma |-> K(F(max sigma)). */
inline acyclic_carrier carrier_of(const multivalued_map& f)
{
    if (!f.is_self_map())
        throw std::invalid_argument("carrier_of: self-map required");
    semicontinuity_report rep = classify(f);
    if (!rep.susc)
    {
        const auto& w = *rep.susc_witness;
        throw std::invalid_argument(
            "carrier_of: map is not susc (witness: '" + f.domain().name(w.x1) + "' <= '" +
            f.domain().name(w.x2) + "' but value contains '" + f.codomain().name(w.y) + "')");
    }
    value_acyclicity_report va = has_acyclic_values(f);
    if (!va.all_acyclic)
    {
        for (int i = 0; i < f.domain().size(); ++i)
            if (va.per_element[i] != value_acyclicity_report::status::acyclic)
                throw std::invalid_argument("carrier_of: value at '" + f.domain().name(i) +
                                            "' is not acyclic");
    }

    acyclic_carrier c;
    c.target_space = f.domain();
    c.source = order_complex(f.domain());
    c.target = c.source;
    const poset& x = f.domain();
    c.values.resize(c.source.dim() + 1);
    for (int d = 0; d <= c.source.dim(); ++d)
    {
        c.values[d].resize(c.source.count(d));
        for (int i = 0; i < c.source.count(d); ++i)
        {
            const auto& s = c.source.simplex(d, i);
            int top = s[0];
            for (int v : s)
                if (x.leq(top, v))
                    top = v;
            c.values[d][i] = f.value(top);
        }
    }

    // carrier invariant: faces carry into cofaces
    for (int d = 1; d <= c.source.dim(); ++d)
        for (int i = 0; i < c.source.count(d); ++i)
        {
            const auto& s = c.source.simplex(d, i);
            std::vector<int> face;
            for (int omit = 0; omit <= d; ++omit)
            {
                face.clear();
                for (int t = 0; t <= d; ++t)
                    if (t != omit)
                        face.push_back(s[t]);
                int fi = c.source.index_of(face);
                if (!subset_of(c.values[d - 1][fi], c.values[d][i]))
                    throw std::logic_error("carrier_of: carrier is not monotone on faces");
            }
        }
    return c;
}

enum class carrier_vertex_rule { smallest, largest };

namespace detail {

// Restriction of one boundary matrix to the subcomplex spanned by a vertex
// set, with its Smith decomposition; cached per carrier value.
struct restricted_boundary {
    std::vector<int> row_simplices, col_simplices;
    smith_decomposition dec;
};

inline bool simplex_in(const std::vector<int>& s, const element_set& verts)
{
    for (int v : s)
        if (!set_contains(verts, v))
            return false;
    return true;
}

inline restricted_boundary restrict_boundary(const simplicial_complex& k,
                                             const chain_complex& c, int n,
                                             const element_set& verts)
{
    restricted_boundary r;
    for (int i = 0; i < k.count(n - 1); ++i)
        if (simplex_in(k.simplex(n - 1, i), verts))
            r.row_simplices.push_back(i);
    for (int j = 0; j < k.count(n); ++j)
        if (simplex_in(k.simplex(n, j), verts))
            r.col_simplices.push_back(j);
    int_matrix sub(static_cast<int>(r.row_simplices.size()),
                   static_cast<int>(r.col_simplices.size()));
    for (size_t jj = 0; jj < r.col_simplices.size(); ++jj)
        for (size_t ii = 0; ii < r.row_simplices.size(); ++ii)
            sub.at(static_cast<int>(ii), static_cast<int>(jj)) =
                c.boundary[n].at(r.row_simplices[ii], r.col_simplices[jj]);
    r.dec = smith(sub);
    return r;
}

} // namespace detail

/**
 * A chain map carried by the carrier, built constructively.
 *
 * Dimension 0 sends each vertex to the canonical vertex of its carrier value
 * (augmentation-preserving).  In dimension n >= 1 the image of the boundary
 * of sigma is a cycle supported in the carrier value by induction, and
 * acyclicity guarantees an integral filling there; the canonical-zero solve
 * makes the result deterministic.
 */
inline chain_map carrier_chain_map(const acyclic_carrier& c,
                                   carrier_vertex_rule rule = carrier_vertex_rule::smallest)
{
    const simplicial_complex& k = c.source;
    const simplicial_complex& t = c.target;
    const chain_complex tc = chain_complex_of(t, false);
    chain_map phi;
    phi.mats.resize(k.dim() + 1);

    phi.mats[0] = int_matrix(t.count(0), k.count(0));
    for (int i = 0; i < k.count(0); ++i)
    {
        const element_set& val = c.value(0, i);
        int v = rule == carrier_vertex_rule::smallest ? val.front() : val.back();
        int ti = t.index_of({v});
        if (ti < 0)
            throw std::logic_error("carrier_chain_map: canonical vertex missing from target");
        phi.mats[0].at(ti, i) = 1;
    }

    const chain_complex kc = chain_complex_of(k, false);
    std::map<element_set, detail::restricted_boundary> cache;
    for (int n = 1; n <= k.dim(); ++n)
    {
        cache.clear();
        int_matrix m(t.count(n), k.count(n));
        for (int j = 0; j < k.count(n); ++j)
        {
            std::vector<bigint> rhs = phi.mats[n - 1] * kc.boundary[n].column(j);
            const element_set& val = c.value(n, j);
            auto it = cache.find(val);
            if (it == cache.end())
                it = cache.emplace(val, detail::restrict_boundary(t, tc, n, val)).first;
            const detail::restricted_boundary& r = it->second;

            std::vector<bigint> sub_rhs(r.row_simplices.size());
            {
                std::vector<char> in_rows(t.count(n - 1), 0);
                for (size_t ii = 0; ii < r.row_simplices.size(); ++ii)
                {
                    in_rows[r.row_simplices[ii]] = 1;
                    sub_rhs[ii] = rhs[r.row_simplices[ii]];
                }
                for (int i = 0; i < t.count(n - 1); ++i)
                    if (!in_rows[i] && rhs[i] != 0)
                        throw std::logic_error(
                            "carrier_chain_map: chain escapes its carrier value");
            }
            auto fill = solve(r.dec, sub_rhs);
            if (!fill)
                throw std::logic_error(
                    "carrier_chain_map: no filling found; carrier value not acyclic");
            for (size_t jj = 0; jj < r.col_simplices.size(); ++jj)
                m.at(r.col_simplices[jj], j) = (*fill)[jj];
        }
        phi.mats[n] = std::move(m);
    }
    return phi;
}

/** Every nonzero coefficient of phi lies in a simplex of the carrier value. */
inline bool carried_by(const chain_map& phi, const acyclic_carrier& c)
{
    for (int n = 0; n <= c.source.dim(); ++n)
        for (int j = 0; j < c.source.count(n); ++j)
        {
            const element_set& val = c.value(n, j);
            for (int i = 0; i < c.target.count(n); ++i)
                if (phi.at(n).at(i, j) != 0 &&
                    !detail::simplex_in(c.target.simplex(n, i), val))
                    return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// induced maps in homology

struct induced_map_data {
    std::vector<int_matrix> mats;     ///< F_n on the free quotients of H_*(X)
    std::vector<int_matrix> p1_mats;  ///< (p1)_* per degree (unimodular)
    std::vector<int_matrix> p2_mats;  ///< (p2)_* per degree
};

/**
 * The raw graph-route computation: project the graph of F to domain and
 * codomain, induce both on free quotients, and compose (p2)_* (p1)_*^{-1}.
 * Valid whenever the first projection induces isomorphisms, which holds for
 * susc and for slsc maps with acyclic values; preconditions are not
 * classified here.
 */
inline induced_map_data induced_map_graph_route(const multivalued_map& f)
{
    const poset& x = f.domain();
    map_graph g = graph_of(f);

    // Collapsing the graph to its core composes the projections with a
    // homotopy equivalence, which changes nothing on homology and keeps the
    // boundary matrices small.
    poset c = core(g.space);
    monotone_map q1(c.size()), q2(c.size());
    for (int i = 0; i < c.size(); ++i)
    {
        int gi = g.space.index_of(c.name(i));
        q1[i] = g.p1[gi];
        q2[i] = g.p2[gi];
    }

    simplicial_complex kc = order_complex(c);
    simplicial_complex kx = order_complex(x);
    homology_data hc = homology(kc);
    homology_data hx = homology(kx);

    chain_map phi1 = simplicial_chain_map(kc, kx, q1);
    chain_map phi2 = simplicial_chain_map(kc, kx, q2);

    induced_map_data out;
    out.p1_mats = induced_on_free_quotient(phi1, hc, hx);
    out.p2_mats = induced_on_free_quotient(phi2, hc, hx);
    out.mats.resize(out.p1_mats.size());
    for (size_t n = 0; n < out.p1_mats.size(); ++n)
    {
        const int_matrix& a1 = out.p1_mats[n];
        if (!a1.is_square() || !is_unimodular(a1))
            throw std::invalid_argument(
                "induced_map_of: graph projection is not a homology isomorphism in degree " +
                std::to_string(n) + " (preconditions violated)");
        out.mats[n] = out.p2_mats[n] * invert_unimodular(a1);
    }
    return out;
}

/**
 * The induced map of a susc or slsc acyclic-valued self-map on every free
 * quotient H_n / T_n.  The slsc case is computed for the opposite order; the
 * matrices transport along the identity identification K(X) = K(X^op).
 */
inline induced_map_data induced_map_of(const multivalued_map& f)
{
    if (!f.is_self_map())
        throw std::invalid_argument("induced_map_of: self-map required");
    value_acyclicity_report va = has_acyclic_values(f);
    if (!va.all_acyclic)
        throw std::invalid_argument("induced_map_of: map does not have acyclic values");
    semicontinuity_report rep = classify(f);
    if (rep.susc)
        return induced_map_graph_route(f);
    if (rep.slsc)
        return induced_map_graph_route(opposite_map(f));
    throw std::invalid_argument("induced_map_of: map is neither susc nor slsc");
}

// ---------------------------------------------------------------------------
// Lefschetz numbers

/** Alternating chain-level trace; equals the homology-level number (Hopf). */
inline bigint lefschetz_of_chain_map(const chain_map& phi)
{
    bigint sum = 0;
    for (int n = 0; n <= phi.dim(); ++n)
    {
        const int_matrix& m = phi.at(n);
        if (!m.is_square())
            throw std::invalid_argument("lefschetz_of_chain_map: self chain map required");
        bigint tr = 0;
        for (int i = 0; i < m.rows(); ++i)
            tr += m.at(i, i);
        sum += (n % 2 == 0) ? tr : -tr;
    }
    return sum;
}

/** Lefschetz number of a monotone single-valued self-map. */
inline bigint lefschetz_single(const poset& x, const monotone_map& f)
{
    if (!is_monotone(x, x, f))
        throw std::invalid_argument("lefschetz_single: map is not monotone");
    simplicial_complex k = order_complex(x);
    return lefschetz_of_chain_map(simplicial_chain_map(k, k, f));
}

enum class lefschetz_route { homology, carrier };

inline bigint lefschetz_number(const multivalued_map& f,
                               lefschetz_route route = lefschetz_route::homology)
{
    if (route == lefschetz_route::homology)
    {
        induced_map_data ind = induced_map_of(f);
        bigint sum = 0;
        for (size_t n = 0; n < ind.mats.size(); ++n)
        {
            bigint tr = 0;
            for (int i = 0; i < ind.mats[n].rows(); ++i)
                tr += ind.mats[n].at(i, i);
            sum += (n % 2 == 0) ? tr : -tr;
        }
        return sum;
    }
    // carrier route (Hopf trace); slsc maps go through the opposite order
    semicontinuity_report rep = classify(f);
    if (rep.susc)
        return lefschetz_of_chain_map(carrier_chain_map(carrier_of(f)));
    if (rep.slsc)
        return lefschetz_of_chain_map(carrier_chain_map(carrier_of(opposite_map(f))));
    throw std::invalid_argument("lefschetz_number: map is neither susc nor slsc");
}

} // namespace fintop
