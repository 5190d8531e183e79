#include "sleib/transform.hpp"

namespace sleib {

AdaptedTriple::AdaptedTriple(GaussianRational a, GaussianRational b, GaussianRational d)
    : A(std::move(a)), B(std::move(b)), D(std::move(d)) {
    if (A.is_zero() || D.is_zero()) throw ZeroScale("adapted triple requires AD != 0");
}

BasisChange BasisChange::identity(int dim) {
    BasisChange f;
    f.dim = dim;
    for (int i = 0; i < dim; ++i) {
        Vec e(dim);
        e[i] = GaussianRational(1);
        f.vectors.push_back(std::move(e));
    }
    return f;
}

Matrix BasisChange::as_matrix() const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) m.at(i, j) = vectors[j][i];
    return m;
}

Vec right_power(const AlgebraTable& t, const Vec& a, int m, const Vec& x) {
    if (m < 0) throw IndexOutOfRange("negative right-multiplication power");
    Vec acc = x;
    for (int s = 0; s < m; ++s) acc = bracket(t, acc, a);
    return acc;
}

namespace {

Vec basis_vec(int dim, int i) {
    Vec e(dim);
    e[i] = GaussianRational(1);
    return e;
}

// Shared tail of the elementary transformations: f(e2) = [f(e0), f(e0)],
// f(e_{i+1}) = [f(e_i), f(e0)].
BasisChange from_images(const AlgebraTable& t, Vec f0, Vec f1) {
    BasisChange f;
    f.dim = t.dim();
    f.vectors.resize(f.dim);
    f.vectors[0] = std::move(f0);
    f.vectors[1] = std::move(f1);
    f.vectors[2] = bracket(t, f.vectors[0], f.vectors[0]);
    for (int i = 2; i + 1 < f.dim; ++i)
        f.vectors[i + 1] = bracket(t, f.vectors[i], f.vectors[0]);
    return f;
}

}  // namespace

BasisChange elementary_sigma(const AlgebraTable& t, const GaussianRational& b) {
    const int dim = t.dim(), n = dim - 1;
    Vec f1 = basis_vec(dim, 1);
    f1[n] += b;
    return from_images(t, basis_vec(dim, 0), std::move(f1));
}

BasisChange elementary_eta(const AlgebraTable& t, const GaussianRational& a, int k) {
    const int dim = t.dim(), n = dim - 1;
    if (k < 2 || k > n) throw IndexOutOfRange("eta index k must be in 2..n");
    Vec f0 = basis_vec(dim, 0);
    f0[k] += a;
    return from_images(t, std::move(f0), basis_vec(dim, 1));
}

BasisChange elementary_delta(const AlgebraTable& t, const GaussianRational& a,
                             const GaussianRational& b, const GaussianRational& d) {
    if (a.is_zero() || d.is_zero()) throw ZeroScale("delta requires ad != 0");
    const int dim = t.dim(), n = dim - 1;
    const GaussianRational gamma = extract_params(t).gamma;
    Vec f0(dim), f1(dim);
    f0[0] = a;
    f0[1] = b;
    f1[1] = d;
    f1[n - 1] = -(b * d * gamma) / a;
    return from_images(t, std::move(f0), std::move(f1));
}

BasisChange adapted_change(const AlgebraTable& t, const AdaptedTriple& tr,
                           AdaptedChangeVariant variant) {
    const int dim = t.dim(), n = dim - 1;
    const ParamVector p = extract_params(t);
    const GaussianRational &A = tr.A, &B = tr.B;

    BasisChange f;
    f.dim = dim;
    f.vectors.resize(dim);
    Vec f0(dim), f1(dim);
    f0[0] = A;
    f0[1] = B;
    f1[1] = tr.D;
    f1[n - 1] = -(B * tr.D * p.gamma) / A;
    f.vectors[0] = std::move(f0);
    f.vectors[1] = std::move(f1);

    // e'_2 = A^2 e2 + AB (beta_3 e3 + ... + beta_n en) + B^2 gamma en, with the
    // leading coefficient A(A+B) under the as-printed variant.
    Vec f2(dim);
    f2[2] = variant == AdaptedChangeVariant::AsPrinted ? A * (A + B) : A * A;
    for (int k = 3; k <= n; ++k) f2[k] = A * B * p.beta_at(k);
    f2[n] += B * B * p.gamma;
    f.vectors[2] = std::move(f2);

    // e'_k = A (sum_{i=0}^{k-2} C(k-1, k-1-i) A^{k-1-i} B^i R_{e1}^i(e_{k-i})
    //        + B^{k-1} R_{e1}^{k-1}(e0)),  3 <= k <= n.
    const Vec e1 = basis_vec(dim, 1);
    for (int k = 3; k <= n; ++k) {
        Vec acc(dim);
        GaussianRational binom(1);  // C(k-1, k-1-i) built incrementally
        GaussianRational apow = A.pow(k - 1);
        GaussianRational bpow(1);
        for (int i = 0; i <= k - 2; ++i) {
            Vec term = right_power(t, e1, i, basis_vec(dim, k - i));
            GaussianRational coef = binom * apow * bpow;
            for (int m = 0; m < dim; ++m)
                if (!term[m].is_zero()) acc[m] += coef * term[m];
            binom = binom * GaussianRational(k - 1 - i) / GaussianRational(i + 1);
            apow /= A;
            bpow *= B;
        }
        Vec tail = right_power(t, e1, k - 1, basis_vec(dim, 0));
        for (int m = 0; m < dim; ++m)
            if (!tail[m].is_zero()) acc[m] += bpow * tail[m];
        for (int m = 0; m < dim; ++m) acc[m] *= A;
        f.vectors[k] = std::move(acc);
    }
    return f;
}

AlgebraTable transport(const AlgebraTable& t, const BasisChange& f) {
    const int dim = t.dim();
    if (f.dim != dim) throw DimensionMismatch("basis change dimension mismatch");
    Matrix finv = invert(f.as_matrix());  // throws SingularMatrix if degenerate
    AlgebraTable out(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Vec prod = bracket(t, f.vectors[i], f.vectors[j]);
            Vec coords = finv.mul(prod);
            for (int k = 0; k < dim; ++k) out.c(i, j, k) = coords[k];
        }
    }
    return out;
}

ParamVector transform_params(const ParamVector& p, const AdaptedTriple& tr) {
    AlgebraTable t = build_table(p);
    BasisChange f = adapted_change(t, tr);
    return extract_params(transport(t, f));
}

}  // namespace sleib
