#include "sleib/sample.hpp"

#include "subset_defs.hpp"

namespace sleib {

namespace {

using GR = GaussianRational;

// Portable uniform draw in [0, n); avoids distribution objects so that the
// same seed yields the same stream on every standard library.
long draw(std::mt19937_64& rng, long n) { return static_cast<long>(rng() % n); }

long draw_signed(std::mt19937_64& rng, long lo, long hi) {
    return lo + draw(rng, hi - lo + 1);
}

}  // namespace

GaussianRational Sampler::pooled() {
    long r = draw(rng_, 100);
    if (r < 30) return GR(0);
    if (r < 50) return GR(draw(rng_, 2) == 0 ? 1 : -1);
    if (r < 60) return GR(draw(rng_, 2) == 0 ? 2 : -2);
    if (r < 85) return GR(draw_signed(rng_, -5, 5), 1 + draw(rng_, 5));
    GR re(draw_signed(rng_, -3, 3), 1 + draw(rng_, 2));
    GR im(draw_signed(rng_, -3, 3), 1 + draw(rng_, 2));
    if (im.is_zero()) im = GR(1);
    return re + im * GR::i();
}

GaussianRational Sampler::nonzero() {
    for (;;) {
        GR x = pooled();
        if (!x.is_zero()) return x;
    }
}

GaussianRational Sampler::generic() {
    static const long dens[] = {7, 11, 13, 17, 19, 23};
    long num = 1 + draw(rng_, 29);
    if (draw(rng_, 2) == 0) num = -num;
    return GR(num, dens[draw(rng_, 6)]);
}

ParamVector Sampler::param_vector(int dim) {
    std::vector<GR> beta(dim - 3);
    for (auto& b : beta) b = pooled();
    GR gamma = pooled();
    long r = draw(rng_, 100);
    if (r < 10) gamma = GR(2) * beta[0] * beta[0];          // gamma = 2 beta_3^2
    else if (r < 20) gamma = GR(3) * beta[1] * beta[1];     // gamma = 3 beta_4^2
    return ParamVector(dim, std::move(beta), std::move(gamma));
}

AdaptedTriple Sampler::triple() {
    GR a = generic(), d = generic();
    GR b = draw(rng_, 4) == 0 ? GR(0) : generic();
    return {std::move(a), std::move(b), std::move(d)};
}

namespace {

using detail::Atom;
using detail::Q;
using detail::SubsetDef;

ParamVector candidate(int dim, const SubsetDef& def, Sampler& s) {
    std::vector<GR> beta(dim - 3);
    for (auto& b : beta) b = s.pooled();
    GR gamma = s.pooled();
    auto B = [&](int t) -> GR& { return beta[t - 3]; };

    // Inequalities on plain parameters first: make them nonzero outright.
    for (const Atom& a : def.atoms) {
        if (a.zero) continue;
        switch (a.q) {
            case Q::B3: case Q::B4: case Q::B5: case Q::B6: case Q::B7: {
                GR& v = B(3 + static_cast<int>(a.q));
                if (v.is_zero()) v = s.nonzero();
                break;
            }
            case Q::G:
                if (gamma.is_zero()) gamma = s.nonzero();
                break;
            default: break;  // composite inequalities left to rejection
        }
    }
    // Equalities, solved for a dependent parameter in listed order.  Every
    // predicate with a Lambda equality also requires beta_3 != 0, so the
    // divisions below are safe.
    for (const Atom& a : def.atoms) {
        if (!a.zero) continue;
        switch (a.q) {
            case Q::B3: case Q::B4: case Q::B5: case Q::B6: case Q::B7:
                B(3 + static_cast<int>(a.q)) = GR(0);
                break;
            case Q::G: gamma = GR(0); break;
            case Q::G2B3: gamma = GR(2) * B(3) * B(3); break;
            case Q::G3B4: gamma = GR(3) * B(4) * B(4); break;
            case Q::L1: B(5) = GR(5) * B(4) * B(4) / (GR(4) * B(3)); break;
            case Q::L2:
                B(6) = (GR(6) * B(3) * B(4) * B(5) - B(4) * gamma - GR(4) * B(4).pow(3)) /
                       (GR(2) * B(3) * B(3));
                break;
            case Q::L3:
                B(6) = (GR(7) * B(4).pow(3) - GR(2) * B(4) * gamma) / (GR(4) * B(3) * B(3));
                break;
            case Q::L4: B(6) = GR(7) * B(4).pow(3) / (GR(4) * B(3) * B(3)); break;
            case Q::L5:
                B(6) = (GR(3) * B(3) * B(4) * B(5) - GR(2) * B(4).pow(3)) / (B(3) * B(3));
                break;
            case Q::L6:
                B(7) = (GR(7) * B(3) * B(3) * B(4) * B(6) - GR(7) * B(4).pow(4) -
                        B(3) * B(4) * gamma) /
                       (GR(2) * B(3).pow(3));
                break;
            case Q::L7:
                B(7) = (GR(21) * B(4).pow(4) - GR(4) * B(3) * B(4) * gamma) /
                       (GR(8) * B(3).pow(3));
                break;
        }
    }
    return ParamVector(dim, std::move(beta), std::move(gamma));
}

}  // namespace

ParamVector Sampler::in_subset(int dim, const std::string& subset, int budget) {
    const auto& defs = detail::subset_defs(dim);
    const SubsetDef* printed = nullptr;
    const SubsetDef* fallback = nullptr;
    for (const SubsetDef& def : defs) {
        if (subset != def.name) continue;
        (def.errata_fallback ? fallback : printed) = &def;
    }
    if (!printed) throw UnsupportedDim("no subset named " + subset + " in dimension " +
                                       std::to_string(dim));
    // Try the printed predicate first; if it never succeeds and a
    // ledger-corrected variant exists (dimension-7 U6), sample that instead.
    for (const SubsetDef* def : {printed, fallback}) {
        if (!def) continue;
        for (int it = 0; it < budget; ++it) {
            ParamVector p = candidate(dim, *def, *this);
            if (subset_of(p).name == subset) return p;
        }
    }
    throw SubsetEmpty("could not sample a point of " + subset + " (dim " + std::to_string(dim) +
                      ") within the budget" +
                      (fallback ? "" : "; the printed predicate may be empty"));
}

}  // namespace sleib
