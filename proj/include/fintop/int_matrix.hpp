/**
 * Dense integer matrices with arbitrary-precision entries.
 *
 * All arithmetic in this library is exact; matrix entries are unbounded
 * integers so that elimination-style algorithms never overflow.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace fintop {

using bigint = boost::multiprecision::cpp_int;

class int_matrix {
  public:
    int_matrix() : rows_(0), cols_(0) {}

    int_matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols)
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("int_matrix: negative dimension");
    }

    /** Build from nested initializer lists, e.g. {{1,2},{3,4}}. */
    int_matrix(std::initializer_list<std::initializer_list<long long>> init)
    {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
        a_.resize(static_cast<size_t>(rows_) * cols_);
        int i = 0;
        for (const auto& row : init)
        {
            if (static_cast<int>(row.size()) != cols_)
                throw std::invalid_argument("int_matrix: ragged initializer");
            int j = 0;
            for (long long v : row)
                a_[static_cast<size_t>(i) * cols_ + j++] = v;
            ++i;
        }
    }

    static int_matrix identity(int n)
    {
        int_matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    bigint& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const bigint& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const int_matrix& o) const = default;

    bool is_zero() const
    {
        for (const auto& v : a_)
            if (v != 0)
                return false;
        return true;
    }

    bool is_square() const noexcept { return rows_ == cols_; }

    int_matrix transpose() const
    {
        int_matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<bigint> column(int j) const
    {
        std::vector<bigint> c(rows_);
        for (int i = 0; i < rows_; ++i)
            c[i] = at(i, j);
        return c;
    }

    void swap_rows(int i, int j)
    {
        if (i == j)
            return;
        for (int k = 0; k < cols_; ++k)
            std::swap(at(i, k), at(j, k));
    }

    void swap_cols(int i, int j)
    {
        if (i == j)
            return;
        for (int k = 0; k < rows_; ++k)
            std::swap(at(k, i), at(k, j));
    }

    /** row_i -= q * row_j */
    void add_row_multiple(int i, int j, const bigint& q)
    {
        if (q == 0)
            return;
        for (int k = 0; k < cols_; ++k)
            at(i, k) += q * at(j, k);
    }

    /** col_i += q * col_j */
    void add_col_multiple(int i, int j, const bigint& q)
    {
        if (q == 0)
            return;
        for (int k = 0; k < rows_; ++k)
            at(k, i) += q * at(k, j);
    }

    void negate_row(int i)
    {
        for (int k = 0; k < cols_; ++k)
            at(i, k) = -at(i, k);
    }

  private:
    int rows_, cols_;
    std::vector<bigint> a_;
};

inline int_matrix operator*(const int_matrix& a, const int_matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("int_matrix multiply: dimension mismatch");
    int_matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
        {
            const bigint& v = a.at(i, k);
            if (v == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) += v * b.at(k, j);
        }
    return c;
}

inline std::vector<bigint> operator*(const int_matrix& a, const std::vector<bigint>& x)
{
    if (a.cols() != static_cast<int>(x.size()))
        throw std::invalid_argument("int_matrix apply: dimension mismatch");
    std::vector<bigint> y(a.rows());
    for (int i = 0; i < a.rows(); ++i)
    {
        bigint s = 0;
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0)
                s += a.at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline std::string to_string(const int_matrix& m)
{
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i)
    {
        s += i ? "; " : "";
        for (int j = 0; j < m.cols(); ++j)
        {
            if (j)
                s += ",";
            s += m.at(i, j).str();
        }
    }
    s += "]";
    return s;
}

} // namespace fintop
