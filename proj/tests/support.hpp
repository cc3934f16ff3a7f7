/**
 * Shared test utilities: exhaustive poset generators and independent oracles
 * (rational-rank Betti numbers, cofactor determinants, boolean-matrix
 * transitive closure, naive brute-force filters).  Everything here stays off
 * the library's own computation paths so cross-checks remain meaningful.
 */

#pragma once

#include "fintop/homology.hpp"
#include "fintop/multimap.hpp"
#include "fintop/poset.hpp"
#include "fintop/simplicial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <string>
#include <vector>

namespace testsupport {

using boost::multiprecision::cpp_rational;
using namespace fintop;

inline std::vector<std::string> letters(int n)
{
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

/** All labeled posets on n elements (1, 3, 19, 219, ... for n = 1, 2, 3, 4). */
inline std::vector<poset> all_posets(int n)
{
    std::vector<poset> out;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                pairs.emplace_back(i, j);
    const int m = static_cast<int>(pairs.size());
    const auto names = letters(n);
    for (unsigned mask = 0; mask < (1u << m); ++mask)
    {
        std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            leq[static_cast<size_t>(i) * n + i] = 1;
        for (int k = 0; k < m; ++k)
            if (mask & (1u << k))
                leq[static_cast<size_t>(pairs[k].first) * n + pairs[k].second] = 1;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
            {
                if (i != j && leq[i * n + j] && leq[j * n + i])
                    ok = false;
                if (!leq[i * n + j])
                    continue;
                for (int k = 0; k < n; ++k)
                    if (leq[j * n + k] && !leq[i * n + k])
                    {
                        ok = false;
                        break;
                    }
            }
        if (ok)
            out.push_back(poset::from_relation(names, leq));
    }
    return out;
}

/** Random poset whose order refines the index order (every iso class occurs). */
inline poset random_poset(std::mt19937& rng, int n, double edge_prob = 0.4)
{
    std::bernoulli_distribution coin(edge_prob);
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        leq[static_cast<size_t>(i) * n + i] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                leq[static_cast<size_t>(i) * n + j] = 1;
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq[static_cast<size_t>(i) * n + k])
                for (int j = 0; j < n; ++j)
                    if (leq[static_cast<size_t>(k) * n + j])
                        leq[static_cast<size_t>(i) * n + j] = 1;
    return poset::from_relation(letters(n), leq);
}

/** Reflexive-transitive closure by boolean repeated squaring (oracle). */
inline std::vector<uint8_t> closure_oracle(int n, const std::vector<std::pair<int, int>>& arcs)
{
    std::vector<uint8_t> r(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        r[static_cast<size_t>(i) * n + i] = 1;
    for (auto [a, b] : arcs)
        r[static_cast<size_t>(a) * n + b] = 1;
    for (;;)
    {
        std::vector<uint8_t> sq(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (r[static_cast<size_t>(i) * n + k])
                    for (int j = 0; j < n; ++j)
                        if (r[static_cast<size_t>(k) * n + j])
                            sq[static_cast<size_t>(i) * n + j] = 1;
        if (sq == r)
            return r;
        r = std::move(sq);
    }
}

/** Exact determinant by cofactor expansion (oracle; n <= 8). */
inline bigint cofactor_det(const int_matrix& m)
{
    const int n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m.at(0, 0);
    bigint d = 0;
    for (int j = 0; j < n; ++j)
    {
        if (m.at(0, j) == 0)
            continue;
        int_matrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i)
        {
            int cc = 0;
            for (int c = 0; c < n; ++c)
                if (c != j)
                    minor.at(i - 1, cc++) = m.at(i, c);
        }
        bigint term = m.at(0, j) * cofactor_det(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

/** Rank over the rationals by Gaussian elimination (oracle). */
inline int rational_rank(const int_matrix& m)
{
    std::vector<std::vector<cpp_rational>> a(m.rows(), std::vector<cpp_rational>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            a[i][j] = cpp_rational(m.at(i, j));
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col)
    {
        int piv = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (a[i][col] != 0)
            {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[rank], a[piv]);
        for (int i = 0; i < m.rows(); ++i)
        {
            if (i == rank || a[i][col] == 0)
                continue;
            cpp_rational q = a[i][col] / a[rank][col];
            for (int j = col; j < m.cols(); ++j)
                a[i][j] -= q * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/** Betti numbers over Q, independent of the Smith-based integral path. */
inline std::vector<int> rational_betti(const simplicial_complex& k)
{
    chain_complex c = chain_complex_of(k, false);
    std::vector<int> out(c.dim() + 1);
    for (int n = 0; n <= c.dim(); ++n)
    {
        int rank_n = n == 0 ? 0 : rational_rank(c.boundary[n]);
        int rank_next = n + 1 <= c.dim() ? rational_rank(c.boundary[n + 1]) : 0;
        out[n] = c.ranks[n] - rank_n - rank_next;
    }
    return out;
}

/** All maps X -> Y (monotone or not), filtered for monotonicity (oracle). */
inline std::vector<monotone_map> naive_monotone_maps(const poset& x, const poset& y)
{
    std::vector<monotone_map> out;
    monotone_map f(x.size(), 0);
    for (;;)
    {
        if (is_monotone(x, y, f))
            out.push_back(f);
        int k = x.size() - 1;
        while (k >= 0 && f[k] == y.size() - 1)
            f[k--] = 0;
        if (k < 0)
            break;
        ++f[k];
    }
    return out;
}

/** All susc acyclic self-maps by unpruned double-loop filtering (oracle). */
inline long long naive_susc_acyclic_count(const poset& x)
{
    const int n = x.size();
    std::vector<element_set> subsets;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
    {
        element_set s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::vector<bool> acyclic(subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i)
        acyclic[i] = is_acyclic(x, subsets[i]);

    long long count = 0;
    std::vector<size_t> pick(n, 0);
    for (;;)
    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = acyclic[pick[i]];
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (x.leq(i, j) && !subset_of(subsets[pick[i]], subsets[pick[j]]))
                    ok = false;
        if (ok)
            ++count;
        int k = n - 1;
        while (k >= 0 && pick[k] == subsets.size() - 1)
            pick[k--] = 0;
        if (k < 0)
            break;
        ++pick[k];
    }
    return count;
}

} // namespace testsupport
