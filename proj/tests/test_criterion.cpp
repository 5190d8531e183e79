#include <doctest.h>

#include <functional>

#include "sleib/criterion.hpp"

using namespace sleib;

namespace {

ParamVector pv(int dim, std::initializer_list<const char*> beta, const char* gamma) {
    std::vector<GaussianRational> b;
    for (const char* s : beta) b.push_back(parse_scalar(s));
    return ParamVector(dim, std::move(b), parse_scalar(gamma));
}

AdaptedTriple tr(const char* a, const char* b, const char* d) {
    return {parse_scalar(a), parse_scalar(b), parse_scalar(d)};
}

const GaussianRational& zv(const ParamVector& z, int idx) {
    return idx == z.n() + 1 ? z.gamma : z.beta_at(idx);
}

// Brute-force chain enumeration, kept independent of the production DP so the
// memoized evaluation has something to disagree with.
GaussianRational s_naive(int j, int k, int t, const ParamVector& z) {
    if (j == 1) return zv(z, t + 2 - k);
    const int L = k + j;
    if (L > t) return GaussianRational(0);
    std::vector<int> idx(j - 1);
    GaussianRational total;
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == j - 1) {
            GaussianRational prod(1);
            int prev = L;
            for (int m = 0; m < j - 1; ++m) {
                prod *= zv(z, idx[m] + 3 - prev);
                prev = idx[m];
            }
            prod *= zv(z, t + 3 - prev);
            total += prod;
            return;
        }
        for (int v = lo; v <= t; ++v) {
            idx[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, L);
    return total;
}

long binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    long b = 1;
    for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
}

GaussianRational psi_naive(int t, const GaussianRational& y, const ParamVector& z) {
    if (t == z.n() + 1) return z.gamma;
    std::vector<GaussianRational> vals(t + 1);
    for (int s = 3; s <= t; ++s) {
        GaussianRational v = z.beta_at(s);
        for (int k = 3; k <= s - 1; ++k) {
            GaussianRational inner;
            for (int j = 1; j <= k - 1; ++j)
                inner += GaussianRational(binom(k - 1, k - 1 - j)) * y.pow(j) * s_naive(j, k, s, z);
            v -= vals[k] * inner;
        }
        vals[s] = v;
    }
    return vals[t];
}

ParamVector generic_params(int dim) {
    std::vector<GaussianRational> beta;
    for (int s = 3; s <= dim - 1; ++s)
        beta.push_back(GaussianRational(3 * s - 7, 2) + GaussianRational(s % 3 - 1) * GaussianRational::i());
    return ParamVector(dim, std::move(beta), parse_scalar("5/3-2i"));
}

}  // namespace

TEST_CASE("psi base cases and low-order closed forms") {
    ParamVector p = pv(6, {"2", "5", "-1"}, "7");
    GaussianRational y = parse_scalar("1/3");
    CHECK(psi(3, y, p) == p.beta_at(3));
    // psi_4 = beta_4 - 2 y beta_3^2
    CHECK(psi(4, y, p) == p.beta_at(4) - GaussianRational(2) * y * p.beta_at(3) * p.beta_at(3));
    // psi_{n+1} is the last parameter regardless of y
    CHECK(psi(6, y, p) == p.gamma);
    CHECK_THROWS_AS(psi(2, y, p), IndexOutOfRange);
    CHECK_THROWS_AS(psi(7, y, p), IndexOutOfRange);
}

TEST_CASE("psi on the stratum beta_3 = 0") {
    // with beta_3 = 0: psi_5 = beta_5 and psi_6 = beta_6 - 3 y beta_4^2
    ParamVector p = pv(8, {"0", "2", "3", "5", "7"}, "11");
    GaussianRational y = parse_scalar("-2");
    CHECK(psi(5, y, p) == p.beta_at(5));
    CHECK(psi(6, y, p) == p.beta_at(6) - GaussianRational(3) * y * p.beta_at(4) * p.beta_at(4));
    // psi_7 = beta_7 - 7 y beta_4 beta_5 on the same stratum
    CHECK(psi(7, y, p) == p.beta_at(7) - GaussianRational(7) * y * p.beta_at(4) * p.beta_at(5));
}

TEST_CASE("memoized psi equals brute-force chain enumeration") {
    GaussianRational y = parse_scalar("2/5+i");
    for (int dim = 5; dim <= 9; ++dim) {
        ParamVector p = generic_params(dim);
        for (int t = 3; t <= dim; ++t) CHECK(psi(t, y, p) == psi_naive(t, y, p));
    }
}

TEST_CASE("closed-form transform agrees with the transport oracle") {
    const AdaptedTriple triples[] = {
        tr("1", "0", "1"),      tr("2", "0", "3"),     tr("1", "1", "1"),
        tr("3", "-1/2", "2"),   tr("1/2", "2/3", "-5"), tr("1+i", "i", "2-i"),
    };
    for (int dim = 5; dim <= 10; ++dim) {
        ParamVector p = generic_params(dim);
        for (const AdaptedTriple& a : triples) {
            CHECK(closed_form_transform(p, a) == transform_params(p, a));
        }
    }
}

TEST_CASE("closed-form transform matches the oracle on degenerate parameters") {
    const ParamVector cases[] = {
        pv(5, {"0", "0"}, "0"),      pv(5, {"1", "0"}, "2"),
        pv(7, {"0", "0", "0", "1"}, "0"), pv(8, {"0", "1", "0", "0", "2"}, "-1"),
    };
    AdaptedTriple a = tr("2", "3", "-1/2");
    for (const ParamVector& p : cases)
        CHECK(closed_form_transform(p, a) == transform_params(p, a));
}

TEST_CASE("as-printed closed forms deviate from the oracle") {
    ParamVector p = generic_params(7);
    AdaptedTriple a = tr("2", "1", "3");
    ParamVector oracle = transform_params(p, a);
    CHECK(closed_form_transform(p, a, ClosedFormVariant::Corrected) == oracle);
    CHECK(closed_form_transform(p, a, ClosedFormVariant::PrintedRho) != oracle);
    CHECK(closed_form_transform(p, a, ClosedFormVariant::PrintedEq2Outer) != oracle);
}

TEST_CASE("triple composition and inversion") {
    AdaptedTriple t1 = tr("2", "-1", "1/3");
    AdaptedTriple t2 = tr("-1/2", "4", "3");
    AdaptedTriple id = AdaptedTriple::identity();

    CHECK(triple_compose(t1, triple_invert(t1)) == id);
    CHECK(triple_compose(triple_invert(t1), t1) == id);
    CHECK(triple_compose(t1, id) == t1);
    CHECK(triple_compose(id, t1) == t1);

    // composition law matches the action on parameters
    ParamVector p = generic_params(6);
    CHECK(transform_params(transform_params(p, t1), t2) ==
          transform_params(p, triple_compose(t1, t2)));
    // and inversion really undoes the transformation
    CHECK(transform_params(transform_params(p, t1), triple_invert(t1)) == p);
}

TEST_CASE("verify_witness") {
    ParamVector p = generic_params(6);
    AdaptedTriple a = tr("3", "1/2", "-2");
    ParamVector q = transform_params(p, a);
    CHECK(verify_witness(p, q, a));
    CHECK_FALSE(verify_witness(p, p, a));
    CHECK(verify_witness(q, p, triple_invert(a)));
    CHECK_THROWS_AS(verify_witness(p, generic_params(7), a), DimensionMismatch);
}
