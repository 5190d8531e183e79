#pragma once

// Internal: the subset predicates as data, shared by the classifier (ordered
// dispatch), the audit (independent evaluation), and the sampler (constructive
// solving of the equality constraints).

#include <vector>

#include "sleib/classify.hpp"

namespace sleib::detail {

// Atomic quantities appearing in the subset predicates.  G2B3 and G3B4 are
// the combinations gamma - 2 beta_3^2 and gamma - 3 beta_4^2.
enum class Q { B3, B4, B5, B6, B7, G, G2B3, G3B4, L1, L2, L3, L4, L5, L6, L7 };

struct Atom {
    Q q;
    bool zero;  // true: quantity = 0; false: quantity != 0
};

struct SubsetDef {
    const char* name;
    std::vector<Atom> atoms;
    // Ledger-corrected predicate, tried only after every printed one fails.
    bool errata_fallback = false;
};

GaussianRational quantity(Q q, const ParamVector& p, const LambdaSet& ls);
bool matches(const SubsetDef& def, const ParamVector& p, const LambdaSet& ls);
const std::vector<SubsetDef>& subset_defs(int dim);

}  // namespace sleib::detail
