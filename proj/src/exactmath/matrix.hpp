#pragma once

#include "exactmath/bigint.hpp"

#include <vector>

namespace flt {

// Dense row-major matrix over Int or Rat.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        r_ = static_cast<int>(rows.size());
        c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
        for (auto& row : rows) {
            if (static_cast<int>(row.size()) != c_) throw DomainError("ragged matrix literal");
            for (auto& x : row) a_.push_back(x);
        }
    }
    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, int cols)
    {
        Matrix m(static_cast<int>(rows.size()), cols);
        for (int i = 0; i < m.r_; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    std::vector<T> row(int i) const { return std::vector<T>(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_); }
    void set_row(int i, const std::vector<T>& v)
    {
        for (int j = 0; j < c_; ++j) (*this)(i, j) = v[j];
    }
    void append_row(const std::vector<T>& v)
    {
        if (r_ == 0 && c_ == 0) c_ = static_cast<int>(v.size());
        if (static_cast<int>(v.size()) != c_) throw DomainError("append_row: width mismatch");
        a_.insert(a_.end(), v.begin(), v.end());
        ++r_;
    }
    void swap_rows(int i, int k)
    {
        if (i == k) return;
        for (int j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(int i, int k)
    {
        if (i == k) return;
        for (int j = 0; j < r_; ++j) std::swap((*this)(j, i), (*this)(j, k));
    }
    // row i += s * row k
    void add_row(int i, int k, const T& s)
    {
        if (s == 0) return;
        for (int j = 0; j < c_; ++j) (*this)(i, j) += s * (*this)(k, j);
    }
    void add_col(int i, int k, const T& s)
    {
        if (s == 0) return;
        for (int j = 0; j < r_; ++j) (*this)(j, i) += s * (*this)(j, k);
    }
    bool is_zero() const
    {
        for (auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_) throw DomainError("matrix product dimension mismatch");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x == 0) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        Matrix m = a;
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        Matrix m = a;
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rat(const IntMatrix& m);
// Row vector times matrix.
IntVec row_times(const IntVec& v, const IntMatrix& m);
RatVec row_times(const RatVec& v, const RatMatrix& m);

struct HnfResult {
    IntMatrix H;  // H = U * M
    IntMatrix U;  // unimodular
    int rank = 0;
};

// Row-style Hermite normal form: nonzero rows first, pivots strictly moving
// right and positive, entries above a pivot reduced into [0, pivot), zero rows
// at the bottom.
HnfResult hnf(const IntMatrix& M);
// HNF without the transform.
IntMatrix hnf_only(const IntMatrix& M);

// Square HNF of the full-rank lattice generated by the rows of M together
// with D*Z^n, computed with entries reduced modulo D.
IntMatrix hnf_mod(const IntMatrix& M, const Int& D);

// Incremental modular HNF of a full-rank sublattice of Z^n containing D*Z^n.
class HnfModAccumulator {
  public:
    HnfModAccumulator(int n, const Int& D);
    void add(IntVec v);
    // Upper-triangular normalized basis.
    IntMatrix basis() const;

  private:
    int n_;
    Int D_;
    std::vector<IntVec> w_;
};

struct SnfResult {
    std::vector<Int> diag;  // d_1 | d_2 | ...; length min(rows, cols)
    IntMatrix U, V;         // U * M * V = diag
};

SnfResult snf(const IntMatrix& M);

// Exact determinant by fraction-free elimination.
Int det(const IntMatrix& M);
Rat det(const RatMatrix& M);
RatMatrix inverse(const RatMatrix& M);
// Row vector x with x * M = b; M square invertible.
RatVec solve_left(const RatMatrix& M, const RatVec& b);

// Basis (as rows) of { x in F_p^r : x * M = 0 } for the r x c matrix M.
std::vector<IntVec> left_kernel_mod_p(const IntMatrix& M, const Int& p);
// Rank of M over F_p.
int rank_mod_p(const IntMatrix& M, const Int& p);
// Rank over Q.
int rank(const RatMatrix& M);

} // namespace flt
