#pragma once

#include "sleib/algebra.hpp"

namespace sleib {

/// (A, B, D) with AD != 0, parameterizing the effective adapted group action.
struct AdaptedTriple {
    GaussianRational A, B, D;

    AdaptedTriple(GaussianRational a, GaussianRational b, GaussianRational d);
    static AdaptedTriple identity() {
        return {GaussianRational(1), GaussianRational(0), GaussianRational(1)};
    }

    friend bool operator==(const AdaptedTriple& x, const AdaptedTriple& y) {
        return x.A == y.A && x.B == y.B && x.D == y.D;
    }
};

/// New basis e'_i expressed in the old basis.
struct BasisChange {
    int dim = 0;
    std::vector<Vec> vectors;  // vectors[i] = f(e_i)

    static BasisChange identity(int dim);
    Matrix as_matrix() const;  // columns are f(e_i)
};

/// m-fold right multiplication R_a^m(x) = [[...[x,a],a],...,a]; R_a^0(x) = x.
Vec right_power(const AlgebraTable& t, const Vec& a, int m, const Vec& x);

/// sigma(b, n):  f(e0) = e0,  f(e1) = e1 + b e_n,  f(e2) = [f(e0), f(e0)],
/// f(e_{i+1}) = [f(e_i), f(e0)].
BasisChange elementary_sigma(const AlgebraTable& t, const GaussianRational& b);

/// eta(a, k):  f(e0) = e0 + a e_k,  f(e1) = e1,  recursion as above; 2 <= k <= n.
BasisChange elementary_eta(const AlgebraTable& t, const GaussianRational& a, int k);

/// delta(a, b, d):  f(e0) = a e0 + b e1,  f(e1) = d e1 - (b d gamma / a) e_{n-1},
/// recursion as above; requires ad != 0 and a mu_2 table (gamma is read off it).
BasisChange elementary_delta(const AlgebraTable& t, const GaussianRational& a,
                             const GaussianRational& b, const GaussianRational& d);

/// Coefficient of e2 in the explicit adapted-change display.  The printed text
/// has A(A+B); the recursion f(e2) = [f(e0), f(e0)] forces A^2 (see the errata
/// ledger).  AsPrinted is kept so the deviation can be witnessed in tests.
enum class AdaptedChangeVariant { AsPrinted, Corrected };

/// The explicit closed-form adapted change of basis:
///   e'_0 = A e0 + B e1,   e'_1 = D e1 - (B D gamma / A) e_{n-1},
///   e'_k = A (sum_{i=0}^{k-2} C(k-1, k-1-i) A^{k-1-i} B^i R_{e1}^i(e_{k-i})
///          + B^{k-1} R_{e1}^{k-1}(e0)),  2 <= k <= n.
BasisChange adapted_change(const AlgebraTable& t, const AdaptedTriple& tr,
                           AdaptedChangeVariant variant = AdaptedChangeVariant::Corrected);

/// Transport of structure: constants of the same bracket in the new basis,
/// solving [f(e_i), f(e_j)] = sum_k c'(i,j,k) f(e_k) exactly.
AlgebraTable transport(const AlgebraTable& t, const BasisChange& f);

/// Ground-truth oracle for the isomorphism criterion:
/// build_table -> adapted_change -> transport -> extract_params.
/// Throws NotAdapted if the transported table leaves the mu_2 shape (which
/// would indicate a bug, never to be repaired silently).
ParamVector transform_params(const ParamVector& p, const AdaptedTriple& tr);

}  // namespace sleib
