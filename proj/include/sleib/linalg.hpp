#pragma once

#include <vector>

#include "sleib/scalar.hpp"

namespace sleib {

using Vec = std::vector<GaussianRational>;

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
  public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const GaussianRational& at(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

    Vec mul(const Vec& x) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

  private:
    int rows_, cols_;
    std::vector<GaussianRational> entries_;
};

/// Exact Gaussian elimination with first-nonzero pivoting.
/// Throws SingularMatrix when the system has no unique solution.
Vec solve_linear(const Matrix& m, const Vec& b);

/// Exact inverse; throws SingularMatrix.
Matrix invert(const Matrix& m);

/// Rank via elimination (used for lower central series dimensions).
int rank(Matrix m);

/// Rank, leaving m in reduced row echelon form.
int rank_in_place(Matrix& m);

}  // namespace sleib
