#include "sleib/linalg.hpp"

#include <utility>

namespace sleib {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

Vec Matrix::mul(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vec y(rows_);
    for (int r = 0; r < rows_; ++r) {
        GaussianRational acc;
        for (int c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero() && !x[c].is_zero()) acc += at(r, c) * x[c];
        }
        y[r] = acc;
    }
    return y;
}

namespace {

// Reduces [m | rhs] to reduced row echelon form in place; returns the rank.
int eliminate(Matrix& m, Matrix* rhs) {
    const int rows = m.rows(), cols = m.cols();
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows; ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead) {
            for (int c = 0; c < cols; ++c) std::swap(m.at(pivot, c), m.at(lead, c));
            if (rhs)
                for (int c = 0; c < rhs->cols(); ++c) std::swap(rhs->at(pivot, c), rhs->at(lead, c));
        }
        GaussianRational inv = m.at(lead, col).inverse();
        for (int c = col; c < cols; ++c) m.at(lead, c) *= inv;
        if (rhs)
            for (int c = 0; c < rhs->cols(); ++c) rhs->at(lead, c) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col);
            for (int c = col; c < cols; ++c)
                if (!m.at(lead, c).is_zero()) m.at(r, c) -= f * m.at(lead, c);
            if (rhs)
                for (int c = 0; c < rhs->cols(); ++c)
                    if (!rhs->at(lead, c).is_zero()) rhs->at(r, c) -= f * rhs->at(lead, c);
        }
        ++lead;
    }
    return lead;
}

}  // namespace

Vec solve_linear(const Matrix& m, const Vec& b) {
    if (m.rows() != m.cols()) throw DimensionMismatch("solve_linear requires a square matrix");
    if (static_cast<int>(b.size()) != m.rows()) throw DimensionMismatch("rhs size mismatch");
    Matrix a = m;
    Matrix rhs(m.rows(), 1);
    for (int r = 0; r < m.rows(); ++r) rhs.at(r, 0) = b[r];
    if (eliminate(a, &rhs) != m.rows()) throw SingularMatrix("no unique solution");
    Vec x(m.rows());
    for (int r = 0; r < m.rows(); ++r) x[r] = rhs.at(r, 0);
    return x;
}

Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("invert requires a square matrix");
    Matrix a = m;
    Matrix rhs = Matrix::identity(m.rows());
    if (eliminate(a, &rhs) != m.rows()) throw SingularMatrix("matrix is singular");
    return rhs;
}

int rank(Matrix m) { return eliminate(m, nullptr); }

int rank_in_place(Matrix& m) { return eliminate(m, nullptr); }

}  // namespace sleib
