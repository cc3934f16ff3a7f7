/**
 * Smith normal form over the integers, with unimodular transforms, exact
 * determinants, and integer linear system solving.
 *
 * smith(A) produces U*A*V = D with U, V unimodular and D diagonal with a
 * divisibility chain d1 | d2 | ... ; all entries nonnegative, zeros trailing.
 * The pivot rule (smallest nonzero absolute value, ties broken row-first then
 * column-first) makes the decomposition deterministic for a fixed input.
 */

#pragma once

#include "fintop/int_matrix.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fintop {

struct smith_decomposition {
    int_matrix d; ///< diagonal form, same shape as the input
    int_matrix u; ///< left transform, rows x rows, det +-1
    int_matrix v; ///< right transform, cols x cols, det +-1
    int rank = 0; ///< number of nonzero diagonal entries

    std::vector<bigint> diagonal() const
    {
        std::vector<bigint> out;
        int n = std::min(d.rows(), d.cols());
        for (int i = 0; i < n; ++i)
            out.push_back(d.at(i, i));
        return out;
    }
};

namespace detail {

// Locate the entry of smallest nonzero absolute value in d[t.., t..].
inline bool find_pivot(const int_matrix& d, int t, int& pi, int& pj)
{
    bool found = false;
    bigint best = 0;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j)
        {
            const bigint& v = d.at(i, j);
            if (v == 0)
                continue;
            bigint a = abs(v);
            if (!found || a < best)
            {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace detail

inline smith_decomposition smith(const int_matrix& a)
{
    smith_decomposition s;
    s.d = a;
    s.u = int_matrix::identity(a.rows());
    s.v = int_matrix::identity(a.cols());
    int_matrix& d = s.d;
    int_matrix& u = s.u;
    int_matrix& v = s.v;

    int t = 0;
    const int limit = std::min(a.rows(), a.cols());
    while (t < limit)
    {
        int pi, pj;
        if (!detail::find_pivot(d, t, pi, pj))
            break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool settled = false;
        while (!settled)
        {
            // Clear the pivot column, re-pivoting whenever a remainder
            // becomes the new smallest entry.
            bool reduced = true;
            for (int i = t + 1; i < d.rows(); ++i)
            {
                if (d.at(i, t) == 0)
                    continue;
                bigint q = d.at(i, t) / d.at(t, t);
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0)
                {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    reduced = false;
                }
            }
            if (!reduced)
                continue;
            for (int j = t + 1; j < d.cols(); ++j)
            {
                if (d.at(t, j) == 0)
                    continue;
                bigint q = d.at(t, j) / d.at(t, t);
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0)
                {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    reduced = false;
                }
            }
            if (!reduced)
                continue;

            // Row and column are clear; enforce that the pivot divides the
            // remaining submatrix before moving on.
            settled = true;
            for (int i = t + 1; i < d.rows() && settled; ++i)
                for (int j = t + 1; j < d.cols() && settled; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0)
                    {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        settled = false;
                    }
        }

        if (d.at(t, t) < 0)
        {
            d.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    s.rank = 0;
    for (int i = 0; i < limit; ++i)
        if (d.at(i, i) != 0)
            ++s.rank;
    return s;
}

/**
 * Solve A*x = b over the integers.
 *
 * Returns the canonical solution (free parameters zero in Smith coordinates)
 * when one exists, std::nullopt otherwise.
 */
inline std::optional<std::vector<bigint>> solve(const smith_decomposition& s,
                                                const std::vector<bigint>& b)
{
    if (s.u.cols() != static_cast<int>(b.size()))
        throw std::invalid_argument("solve: dimension mismatch");
    std::vector<bigint> ub = s.u * b;
    std::vector<bigint> y(s.v.rows());
    for (int i = 0; i < static_cast<int>(ub.size()); ++i)
    {
        if (i < s.rank)
        {
            if (ub[i] % s.d.at(i, i) != 0)
                return std::nullopt;
            y[i] = ub[i] / s.d.at(i, i);
        }
        else if (ub[i] != 0)
        {
            return std::nullopt;
        }
    }
    return s.v * y;
}

inline std::optional<std::vector<bigint>> solve(const int_matrix& a,
                                                const std::vector<bigint>& b)
{
    return solve(smith(a), b);
}

/** Exact determinant via fraction-free (Bareiss) elimination. */
inline bigint determinant(const int_matrix& a)
{
    if (!a.is_square())
        throw std::invalid_argument("determinant: matrix not square");
    int n = a.rows();
    if (n == 0)
        return 1;
    int_matrix m = a;
    bigint prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k)
    {
        if (m.at(k, k) == 0)
        {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0)
                {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

inline bool is_unimodular(const int_matrix& a)
{
    if (!a.is_square())
        return false;
    bigint d = determinant(a);
    return d == 1 || d == -1;
}

inline int_matrix invert_unimodular(const int_matrix& a)
{
    if (!a.is_square())
        throw std::invalid_argument("invert_unimodular: matrix not square");
    smith_decomposition s = smith(a);
    if (s.rank != a.rows() || !(s.d == int_matrix::identity(a.rows())))
        throw std::invalid_argument("invert_unimodular: matrix is not unimodular");
    return s.v * s.u; // U*A*V = I  =>  A^{-1} = V*U
}

} // namespace fintop
