#include "sleib/criterion.hpp"

namespace sleib {

TripleAction::TripleAction(GaussianRational x, GaussianRational y, GaussianRational u)
    : x(std::move(x)), y(std::move(y)), u(std::move(u)) {
    if (this->x.is_zero() || this->u.is_zero()) throw ZeroScale("action requires x, u != 0");
}

namespace {

const GaussianRational& zval(const ParamVector& z, int idx) {
    return idx == z.n() + 1 ? z.gamma : z.beta_at(idx);
}

// S_j(k, t): sum over non-decreasing chains k+j <= i_1 <= ... <= i_{j-1} <= t
// of prod_m z_{i_{m+1}+3-i_m}, with i_0 = k+j and i_j = t.  Evaluated by the
// chain DP f_1(v) = z_{v+3-L}, f_{m+1}(w) = sum_{v<=w} f_m(v) z_{w+3-v}.
GaussianRational chain_sum(int j, int k, int t, const ParamVector& z) {
    const int L = k + j;
    if (j == 1) return zval(z, t + 2 - k);
    if (L > t) return GaussianRational(0);
    std::vector<GaussianRational> f(t - L + 1);
    for (int v = L; v <= t; ++v) f[v - L] = zval(z, v + 3 - L);
    for (int m = 2; m <= j - 1; ++m) {
        std::vector<GaussianRational> g(t - L + 1);
        for (int w = L; w <= t; ++w) {
            GaussianRational acc;
            for (int v = L; v <= w; ++v) {
                if (!f[v - L].is_zero()) acc += f[v - L] * zval(z, w + 3 - v);
            }
            g[w - L] = std::move(acc);
        }
        f = std::move(g);
    }
    GaussianRational s;
    for (int v = L; v <= t; ++v) {
        if (!f[v - L].is_zero()) s += f[v - L] * zval(z, t + 3 - v);
    }
    return s;
}

// sum_{j=1}^{k-1} C(k-1, k-1-j) y^j S_j(k, t)
GaussianRational bracket_factor(int k, int t, const GaussianRational& y, const ParamVector& z) {
    GaussianRational acc;
    GaussianRational binom(k - 1);  // C(k-1, k-1-j), incrementally
    GaussianRational ypow = y;
    for (int j = 1; j <= k - 1; ++j) {
        GaussianRational s = chain_sum(j, k, t, z);
        if (!s.is_zero()) acc += binom * ypow * s;
        binom = binom * GaussianRational(k - 1 - j) / GaussianRational(j + 1);
        ypow *= y;
    }
    return acc;
}

}  // namespace

GaussianRational psi(int t, const GaussianRational& y, const ParamVector& z) {
    const int n = z.n();
    if (t < 3 || t > n + 1) throw IndexOutOfRange("psi index must be in 3..n+1");
    if (t == n + 1) return z.gamma;
    // psi_s = z_s - sum_{k=3}^{s-1} psi_k * bracket_factor(k, s), bottom-up.
    std::vector<GaussianRational> vals(t + 1);
    for (int s = 3; s <= t; ++s) {
        GaussianRational v = z.beta_at(s);
        for (int k = 3; k <= s - 1; ++k) {
            if (!vals[k].is_zero()) v -= vals[k] * bracket_factor(k, s, y, z);
        }
        vals[s] = std::move(v);
    }
    return vals[t];
}

ParamVector rho(const TripleAction& a, const ParamVector& z, ClosedFormVariant variant) {
    const int n = z.n();
    std::vector<GaussianRational> beta(n - 2);
    GaussianRational gamma;

    // Shared leading components beta'_{t+2} = x^t u psi_{t+2} (exponent t-1 as
    // printed), for t+2 up to n-1.
    for (int t = 1; t <= n - 3; ++t) {
        const int e = variant == ClosedFormVariant::PrintedRho ? t - 1 : t;
        beta[t - 1] = a.x.pow(e) * a.u * psi(t + 2, a.y, z);
    }
    switch (variant) {
        case ClosedFormVariant::Corrected:
            beta[n - 3] = a.x.pow(n - 2) * a.u * (psi(n, a.y, z) + a.y * z.gamma);
            gamma = a.x.pow(n - 2) * a.u * a.u * z.gamma;
            break;
        case ClosedFormVariant::PrintedRho:
            beta[n - 3] = a.x.pow(n - 3) * a.u * psi(n, a.y, z);
            gamma = a.x.pow(n - 5) * a.u * a.u * z.gamma;
            break;
        case ClosedFormVariant::PrintedEq2Outer:
            beta[n - 3] = a.x.pow(n - 2) * a.u * a.y * z.gamma + psi(n, a.y, z);
            gamma = a.x.pow(n - 2) * a.u * a.u * z.gamma;
            break;
    }
    return ParamVector(z.dim, std::move(beta), std::move(gamma));
}

ParamVector closed_form_transform(const ParamVector& p, const AdaptedTriple& t,
                                  ClosedFormVariant variant) {
    return rho(TripleAction::of(t), p, variant);
}

AdaptedTriple triple_compose(const AdaptedTriple& t1, const AdaptedTriple& t2) {
    return {t1.A * t2.A, t1.B * t2.A + t2.B * t1.D, t1.D * t2.D};
}

AdaptedTriple triple_invert(const AdaptedTriple& t) {
    return {t.A.inverse(), -t.B / (t.A * t.D), t.D.inverse()};
}

bool verify_witness(const ParamVector& p, const ParamVector& q, const AdaptedTriple& t) {
    if (p.dim != q.dim) throw DimensionMismatch("witness endpoints have different dimensions");
    return transform_params(p, t) == q;
}

}  // namespace sleib
