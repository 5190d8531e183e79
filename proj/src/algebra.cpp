#include "sleib/algebra.hpp"

#include <sstream>

namespace sleib {

ParamVector::ParamVector(int dim, std::vector<GaussianRational> beta, GaussianRational gamma)
    : dim(dim), beta(std::move(beta)), gamma(std::move(gamma)) {
    if (dim < kMinDim || dim > kMaxDim)
        throw UnsupportedDim("dim must be in " + std::to_string(kMinDim) + ".." +
                             std::to_string(kMaxDim) + ", got " + std::to_string(dim));
    if (static_cast<int>(this->beta.size()) != dim - 3)
        throw DimensionMismatch("expected " + std::to_string(dim - 3) + " beta parameters, got " +
                                std::to_string(this->beta.size()));
}

const GaussianRational& ParamVector::beta_at(int t) const {
    if (t < 3 || t > n()) throw IndexOutOfRange("beta index " + std::to_string(t));
    return beta[t - 3];
}

std::string ParamVector::to_string() const {
    std::ostringstream os;
    os << "L(";
    for (const auto& b : beta) os << format_scalar(b) << ",";
    os << format_scalar(gamma) << ")";
    return os.str();
}

AlgebraTable::AlgebraTable(int dim)
    : dim_(dim), cube_(static_cast<size_t>(dim) * dim * dim) {}

Vec AlgebraTable::product(int i, int j) const {
    Vec v(dim_);
    for (int k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
}

AlgebraTable build_table(const ParamVector& p) {
    const int n = p.n();
    AlgebraTable t(p.dim);
    t.c(0, 0, 2) = GaussianRational(1);
    for (int i = 2; i <= n - 1; ++i) t.c(i, 0, i + 1) = GaussianRational(1);
    for (int k = 3; k <= n; ++k) t.c(0, 1, k) = p.beta_at(k);
    t.c(1, 1, n) = p.gamma;
    for (int j = 2; j <= n - 2; ++j)
        for (int k = 3; k <= n + 1 - j; ++k) t.c(j, 1, j + k - 1) = p.beta_at(k);
    return t;
}

Vec bracket(const AlgebraTable& t, const Vec& x, const Vec& y) {
    const int dim = t.dim();
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
        throw DimensionMismatch("bracket operands must have length dim");
    Vec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            GaussianRational f = x[i] * y[j];
            for (int k = 0; k < dim; ++k)
                if (!t.c(i, j, k).is_zero()) out[k] += f * t.c(i, j, k);
        }
    }
    return out;
}

std::vector<std::array<int, 3>> leibniz_violations(const AlgebraTable& t) {
    const int dim = t.dim();
    std::vector<std::array<int, 3>> bad;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            for (int k = 0; k < dim; ++k) {
                // [e_i [e_j e_k]] - [[e_i e_j] e_k] + [[e_i e_k] e_j], per component.
                bool ok = true;
                for (int m = 0; m < dim && ok; ++m) {
                    GaussianRational acc;
                    for (int l = 0; l < dim; ++l) {
                        if (!t.c(j, k, l).is_zero()) acc += t.c(j, k, l) * t.c(i, l, m);
                        if (!t.c(i, j, l).is_zero()) acc -= t.c(i, j, l) * t.c(l, k, m);
                        if (!t.c(i, k, l).is_zero()) acc += t.c(i, k, l) * t.c(l, j, m);
                    }
                    ok = acc.is_zero();
                }
                if (!ok) bad.push_back({i, j, k});
            }
        }
    }
    return bad;
}

std::vector<int> lower_central_dims(const AlgebraTable& t) {
    const int dim = t.dim();
    std::vector<int> dims{dim};
    // Basis of the current term L^k, as rows.
    std::vector<Vec> current;
    for (int i = 0; i < dim; ++i) {
        Vec e(dim);
        e[i] = GaussianRational(1);
        current.push_back(std::move(e));
    }
    while (dims.back() > 0) {
        std::vector<Vec> products;
        for (const Vec& x : current)
            for (int j = 0; j < dim; ++j) {
                Vec ej(dim);
                ej[j] = GaussianRational(1);
                products.push_back(bracket(t, x, ej));
            }
        Matrix m(static_cast<int>(products.size()), dim);
        for (int r = 0; r < static_cast<int>(products.size()); ++r)
            for (int c = 0; c < dim; ++c) m.at(r, c) = products[r][c];
        int rk = rank(m);  // m left untouched; rank() reduces a copy
        dims.push_back(rk);
        if (rk == dims[dims.size() - 2] && rk > 0)
            break;  // series stabilized above zero; not nilpotent
        // Row-reduce the products to a basis for the next round.
        Matrix red = m;
        rank_in_place(red);
        std::vector<Vec> basis;
        for (int r = 0; r < red.rows(); ++r) {
            Vec row(dim);
            bool nonzero = false;
            for (int c = 0; c < dim; ++c) {
                row[c] = red.at(r, c);
                nonzero = nonzero || !row[c].is_zero();
            }
            if (nonzero) basis.push_back(std::move(row));
        }
        current = std::move(basis);
    }
    return dims;
}

ParamVector extract_params(const AlgebraTable& t) {
    const int dim = t.dim();
    const int n = dim - 1;
    if (dim < kMinDim || dim > kMaxDim) throw UnsupportedDim("table dimension out of range");
    if (t.c(0, 0, 2).is_zero()) throw NotAdapted("[e0 e0] must equal e2", 0, 0, 2);
    std::vector<GaussianRational> beta;
    for (int k = 3; k <= n; ++k) beta.push_back(t.c(0, 1, k));
    ParamVector p(dim, std::move(beta), t.c(1, 1, n));
    AlgebraTable expect = build_table(p);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (t.c(i, j, k) != expect.c(i, j, k))
                    throw NotAdapted("table entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         "," + std::to_string(k) + ") violates the mu_2 pattern",
                                     i, j, k);
    return p;
}

std::vector<int> filiform_profile(int dim) {
    std::vector<int> prof{dim};
    for (int d = dim - 2; d >= 0; --d) prof.push_back(d);
    return prof;
}

}  // namespace sleib
