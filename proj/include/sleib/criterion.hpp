#pragma once

#include "sleib/transform.hpp"

namespace sleib {

/// The action parameters (x, y, u) = (1/A, B/A, D/A); x != 0, u != 0.
struct TripleAction {
    GaussianRational x, y, u;

    TripleAction(GaussianRational x, GaussianRational y, GaussianRational u);
    static TripleAction of(const AdaptedTriple& t) {
        return {t.A.inverse(), t.B / t.A, t.D / t.A};
    }
};

/// psi_t(y; z) for 3 <= t <= n+1, where z = (beta_3, ..., beta_n, gamma).
/// psi_{n+1}(y; z) = z_{n+1}; below that the printed nested-sum recursion,
/// evaluated bottom-up with memoization.
GaussianRational psi(int t, const GaussianRational& y, const ParamVector& z);

/// Which reading of the printed closed forms to evaluate.  `Corrected` is the
/// errata-resolved form that matches the transport oracle exactly; the others
/// reproduce the text as printed and exist to witness the deviations.
enum class ClosedFormVariant {
    Corrected,
    PrintedRho,       // rho_t = x^{t-1} u psi_{t+2},  rho_{n-1} = x^{n-5} u^2 psi_{n+1}
    PrintedEq2Outer,  // beta'_n = (1/A^{n-2})(D/A)(B/A) gamma  +  psi_n(B/A; beta)
};

/// The rho operator: parameter tuple of the transformed algebra.
ParamVector rho(const TripleAction& a, const ParamVector& z,
                ClosedFormVariant variant = ClosedFormVariant::Corrected);

/// Closed-form counterpart of transform_params (the rho operator applied to p).
ParamVector closed_form_transform(const ParamVector& p, const AdaptedTriple& t,
                                  ClosedFormVariant variant = ClosedFormVariant::Corrected);

/// Composition of actions: applying t1 then t2 equals applying the composite.
AdaptedTriple triple_compose(const AdaptedTriple& t1, const AdaptedTriple& t2);

/// Inverse action: (1/A, -B/(AD), 1/D).
AdaptedTriple triple_invert(const AdaptedTriple& t);

/// True iff transform_params(p, t) == q exactly (oracle-based).
bool verify_witness(const ParamVector& p, const ParamVector& q, const AdaptedTriple& t);

}  // namespace sleib
