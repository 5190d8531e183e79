#include <doctest.h>

#include "sleib/transform.hpp"

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

}  // namespace

TEST_CASE("elementary transformations stay inside the class") {
    // Transporting through sigma, eta, delta always lands on another table of
    // the same shape (extract_params succeeds instead of throwing).
    ParamVector p = pv(7, {"1", "2", "-1/2", "3"}, "4");
    AlgebraTable t = build_table(p);

    CHECK_NOTHROW(extract_params(transport(t, elementary_sigma(t, parse_scalar("5/3")))));
    for (int k = 2; k <= 6; ++k)
        CHECK_NOTHROW(extract_params(transport(t, elementary_eta(t, parse_scalar("-2"), k))));
    CHECK_NOTHROW(extract_params(
        transport(t, elementary_delta(t, parse_scalar("2"), parse_scalar("1+i"), parse_scalar("3")))));
}

TEST_CASE("sigma and eta fix the parameters where expected") {
    // sigma only shifts e1 by a multiple of the last basis vector; the
    // transported parameters are unchanged.
    ParamVector p = pv(6, {"1", "0", "2"}, "3");
    AlgebraTable t = build_table(p);
    CHECK(extract_params(transport(t, elementary_sigma(t, parse_scalar("7")))) == p);
}

TEST_CASE("adapted change with the identity triple is the identity") {
    ParamVector p = pv(6, {"2", "-1", "i"}, "1/2");
    AlgebraTable t = build_table(p);
    BasisChange f = adapted_change(t, AdaptedTriple::identity());
    CHECK(f.as_matrix() == Matrix::identity(6));
    CHECK(transform_params(p, AdaptedTriple::identity()) == p);
}

TEST_CASE("adapted change agrees with the delta elementary transformation") {
    // delta(a, b, d) is the adapted change (A, B, D) = (a, b, d) followed by
    // the recursion; both must transport to the same parameters.
    ParamVector p = pv(6, {"1", "2", "3"}, "-1");
    AlgebraTable t = build_table(p);
    BasisChange direct = elementary_delta(t, parse_scalar("2"), parse_scalar("1"), parse_scalar("3"));
    ParamVector via_delta = extract_params(transport(t, direct));
    ParamVector via_triple = transform_params(p, tr("2", "1", "3"));
    CHECK(via_delta == via_triple);
}

TEST_CASE("the closed-form basis change matches the recursion") {
    // The explicit display for e'_k must equal the recursive images
    // f(e2) = [f(e0), f(e0)], f(e_{k+1}) = [f(e_k), f(e0)].
    for (int dim = 5; dim <= 9; ++dim) {
        std::vector<GaussianRational> beta;
        for (int s = 3; s <= dim - 1; ++s) beta.push_back(GaussianRational(2 * s - 5, 3));
        ParamVector p(dim, std::move(beta), parse_scalar("-2+i"));
        AlgebraTable t = build_table(p);
        AdaptedTriple a = tr("3", "1/2", "-2");
        BasisChange closed = adapted_change(t, a);
        // rebuild recursively from the first two images
        Vec f0 = closed.vectors[0], f1 = closed.vectors[1];
        Vec f2 = bracket(t, f0, f0);
        CHECK(closed.vectors[2] == f2);
        Vec prev = f2;
        for (int k = 3; k < dim; ++k) {
            prev = bracket(t, prev, f0);
            CHECK(closed.vectors[k] == prev);
        }
    }
}

TEST_CASE("the as-printed e2 coefficient deviates whenever B != 0") {
    ParamVector p = pv(5, {"1", "0"}, "2");
    AlgebraTable t = build_table(p);
    AdaptedTriple a = tr("2", "1", "1");
    BasisChange printed = adapted_change(t, a, AdaptedChangeVariant::AsPrinted);
    BasisChange fixed = adapted_change(t, a, AdaptedChangeVariant::Corrected);
    CHECK(printed.vectors[2] != fixed.vectors[2]);
    // printed: A(A+B) = 6; recursion forces A^2 = 4
    CHECK(printed.vectors[2][2] == GaussianRational(6));
    CHECK(fixed.vectors[2][2] == GaussianRational(4));
    // and only the corrected one satisfies f(e2) = [f(e0), f(e0)]
    CHECK(fixed.vectors[2] == bracket(t, fixed.vectors[0], fixed.vectors[0]));
    CHECK(printed.vectors[2] != bracket(t, printed.vectors[0], printed.vectors[0]));
}

TEST_CASE("transport is functorial in the triple") {
    ParamVector p = pv(7, {"1", "1/2", "0", "-3"}, "2");
    AdaptedTriple t1 = tr("2", "1", "-1");
    AdaptedTriple t2 = tr("1/3", "-2", "5");
    AdaptedTriple t12{t1.A * t2.A, t1.B * t2.A + t2.B * t1.D, t1.D * t2.D};
    CHECK(transform_params(transform_params(p, t1), t2) == transform_params(p, t12));
}

TEST_CASE("worked example: scaling a five-dimensional family member") {
    // L(1,0,l) under (A,B,D) = (1,0,2) becomes L(2,0,4l).
    ParamVector q = transform_params(pv(5, {"1", "0"}, "3"), tr("1", "0", "2"));
    CHECK(q == pv(5, {"2", "0"}, "12"));
}

TEST_CASE("degenerate triples are rejected") {
    CHECK_THROWS_AS(tr("0", "1", "1"), ZeroScale);
    CHECK_THROWS_AS(tr("1", "1", "0"), ZeroScale);
}
