/**
 * Order complexes, chain complexes and chain maps.
 *
 * Simplices are the nonempty chains of a poset, stored as vertex tuples that
 * strictly increase in the global element order; boundary signs follow the
 * standard alternating convention on that ordering.
 */

#pragma once

#include "fintop/int_matrix.hpp"
#include "fintop/poset.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace fintop {

class simplicial_complex {
  public:
    simplicial_complex() = default;

    explicit simplicial_complex(int n_vertices) : n_vertices_(n_vertices) {}

    int vertex_count() const noexcept { return n_vertices_; }
    int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

    int count(int d) const
    {
        return (d >= 0 && d <= dim()) ? static_cast<int>(by_dim_[d].size()) : 0;
    }

    const std::vector<std::vector<int>>& simplices(int d) const { return by_dim_.at(d); }
    const std::vector<int>& simplex(int d, int i) const { return by_dim_.at(d).at(i); }

    /** Index of a simplex given as an ascending vertex tuple, or -1. */
    int index_of(const std::vector<int>& s) const
    {
        int d = static_cast<int>(s.size()) - 1;
        if (d < 0 || d > dim())
            return -1;
        auto it = index_[d].find(s);
        return it == index_[d].end() ? -1 : it->second;
    }

    /** Append a simplex (must be dimension-ordered and duplicate-free). */
    void add(const std::vector<int>& s)
    {
        int d = static_cast<int>(s.size()) - 1;
        if (d < 0)
            throw std::invalid_argument("simplicial_complex: empty simplex");
        while (dim() < d)
        {
            by_dim_.emplace_back();
            index_.emplace_back();
        }
        index_[d][s] = static_cast<int>(by_dim_[d].size());
        by_dim_[d].push_back(s);
    }

    long long total_simplices() const
    {
        long long t = 0;
        for (const auto& v : by_dim_)
            t += static_cast<long long>(v.size());
        return t;
    }

    bool operator==(const simplicial_complex& o) const
    {
        return n_vertices_ == o.n_vertices_ && by_dim_ == o.by_dim_;
    }

  private:
    int n_vertices_ = 0;
    std::vector<std::vector<std::vector<int>>> by_dim_;
    std::vector<std::map<std::vector<int>, int>> index_;
};

/**
 * The order complex K(X): one simplex per nonempty chain of X.
 * Vertices are poset element indices; K(X) = K(X^op) as stored data.
 */
inline simplicial_complex order_complex(const poset& p)
{
    if (p.size() == 0)
        throw std::invalid_argument("order_complex: empty poset");
    simplicial_complex k(p.size());
    std::vector<int> chain;
    auto rec = [&](auto&& self, int start) -> void {
        for (int v = start; v < p.size(); ++v)
        {
            bool ok = true;
            for (int u : chain)
                if (!p.comparable(u, v))
                {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chain.push_back(v);
            k.add(chain);
            self(self, v + 1);
            chain.pop_back();
        }
    };
    rec(rec, 0);
    return k;
}

/** Alternating sum of simplex counts. */
inline long long euler_characteristic(const simplicial_complex& k)
{
    long long chi = 0;
    for (int d = 0; d <= k.dim(); ++d)
        chi += (d % 2 == 0) ? k.count(d) : -k.count(d);
    return chi;
}

/**
 * Chain complex of a simplicial complex.
 *
 * boundary[n] maps n-chains to (n-1)-chains for n >= 1.  When augmented,
 * boundary[0] is the augmentation row (all ones); otherwise it is the 0 x
 * rank_0 zero map.  The identity boundary[n-1] * boundary[n] = 0 is checked
 * at construction.
 */
struct chain_complex {
    std::vector<int> ranks;
    std::vector<int_matrix> boundary;
    bool augmented = false;

    int dim() const noexcept { return static_cast<int>(ranks.size()) - 1; }
};

inline chain_complex chain_complex_of(const simplicial_complex& k, bool augmented)
{
    chain_complex c;
    c.augmented = augmented;
    const int d = k.dim();
    c.ranks.resize(d + 1);
    for (int n = 0; n <= d; ++n)
        c.ranks[n] = k.count(n);
    c.boundary.resize(d + 1);
    c.boundary[0] = int_matrix(augmented ? 1 : 0, c.ranks[0]);
    if (augmented)
        for (int j = 0; j < c.ranks[0]; ++j)
            c.boundary[0].at(0, j) = 1;
    for (int n = 1; n <= d; ++n)
    {
        int_matrix b(c.ranks[n - 1], c.ranks[n]);
        for (int j = 0; j < c.ranks[n]; ++j)
        {
            const auto& s = k.simplex(n, j);
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (int omit = 0; omit <= n; ++omit)
            {
                face.clear();
                for (int t = 0; t <= n; ++t)
                    if (t != omit)
                        face.push_back(s[t]);
                int fi = k.index_of(face);
                if (fi < 0)
                    throw std::logic_error("chain_complex_of: complex not closed under faces");
                b.at(fi, j) += (omit % 2 == 0) ? 1 : -1;
            }
        }
        c.boundary[n] = std::move(b);
    }
    for (int n = 1; n <= d; ++n)
        if (!(c.boundary[n - 1] * c.boundary[n]).is_zero())
            throw std::logic_error("chain_complex_of: boundary of boundary is nonzero");
    return c;
}

/** Degree-wise matrices phi[n] : C_n(source) -> C_n(target). */
struct chain_map {
    std::vector<int_matrix> mats;

    const int_matrix& at(int n) const { return mats.at(n); }
    int dim() const noexcept { return static_cast<int>(mats.size()) - 1; }
};

/**
 * Chain map induced by a vertex map between complexes.
 *
 * An n-simplex maps to its image simplex with the sign of the sorting
 * permutation, or to zero when two vertices collide.
 */
inline chain_map simplicial_chain_map(const simplicial_complex& src,
                                      const simplicial_complex& tgt,
                                      const std::vector<int>& vertex_map)
{
    if (static_cast<int>(vertex_map.size()) != src.vertex_count())
        throw std::invalid_argument("simplicial_chain_map: vertex map size mismatch");
    chain_map phi;
    phi.mats.resize(src.dim() + 1);
    for (int n = 0; n <= src.dim(); ++n)
    {
        int_matrix m(tgt.count(n), src.count(n));
        for (int j = 0; j < src.count(n); ++j)
        {
            std::vector<int> image;
            image.reserve(n + 1);
            for (int v : src.simplex(n, j))
                image.push_back(vertex_map.at(v));
            // insertion sort, tracking the permutation sign
            int sign = 1;
            bool degenerate = false;
            for (size_t a = 1; a < image.size() && !degenerate; ++a)
                for (size_t b = a; b > 0; --b)
                {
                    if (image[b] == image[b - 1])
                    {
                        degenerate = true;
                        break;
                    }
                    if (image[b] < image[b - 1])
                    {
                        std::swap(image[b], image[b - 1]);
                        sign = -sign;
                    }
                    else
                        break;
                }
            if (degenerate)
                continue;
            int ti = tgt.index_of(image);
            if (ti < 0)
                throw std::invalid_argument("simplicial_chain_map: image is not a simplex");
            m.at(ti, j) = sign;
        }
        phi.mats[n] = std::move(m);
    }
    return phi;
}

/** Verify boundary * phi = phi * boundary (and augmentation preservation). */
inline bool is_chain_map(const chain_map& phi, const chain_complex& src, const chain_complex& tgt)
{
    for (int n = 0; n <= src.dim(); ++n)
    {
        if (n > tgt.dim())
        {
            if (!phi.at(n).is_zero())
                return false;
            continue;
        }
        const int_matrix& lhs_phi = phi.at(n);
        if (n == 0)
        {
            if (src.augmented && tgt.augmented && !(tgt.boundary[0] * lhs_phi == src.boundary[0]))
                return false;
            continue;
        }
        const int_matrix lhs = tgt.boundary[n] * lhs_phi;
        const int_matrix rhs = phi.at(n - 1) * src.boundary[n];
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

} // namespace fintop
