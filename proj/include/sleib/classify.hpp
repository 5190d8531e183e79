#pragma once

#include <optional>
#include <string>

#include "sleib/criterion.hpp"

namespace sleib {

/// Lambda_1..Lambda_7, the shorthand polynomials of the classification:
///   L1 = 4 b3 b5 - 5 b4^2
///   L2 = 2 b3^2 b6 - 6 b3 b4 b5 + b4 g + 4 b4^3
///   L3 = 4 b3^2 b6 + 2 b4 g - 7 b4^3
///   L4 = 4 b3^2 b6 - 7 b4^3
///   L5 = b3^2 b6 - 3 b3 b4 b5 + 2 b4^3
///   L6 = 4 b3 b4 g + 8 b3^3 b7 - 28 b3^2 b4 b6 + 28 b4^4
///   L7 = 4 b3 b4 g + 8 b3^3 b7 - 21 b4^4
/// Components referencing a beta the dimension does not have are undefined.
struct LambdaSet {
    std::array<std::optional<GaussianRational>, 7> values;

    bool defined(int k) const { return values[k - 1].has_value(); }
    /// Throws IndexOutOfRange when the component is undefined for the dim.
    const GaussianRational& at(int k) const;
};

LambdaSet lambda_values(const ParamVector& p);

/// Subset label within the printed decomposition of a given dimension.
/// `Uncovered` means no printed predicate matched (a documented gap).
struct SubsetLabel {
    int dim = 0;
    std::string name;  // "U1".."U22", "F", "Uncovered"

    bool covered() const { return name != "Uncovered"; }
    std::string to_string() const { return name; }

    friend bool operator==(const SubsetLabel& a, const SubsetLabel& b) {
        return a.dim == b.dim && a.name == b.name;
    }
    friend bool operator!=(const SubsetLabel& a, const SubsetLabel& b) { return !(a == b); }
};

/// First matching predicate in the listed order; Uncovered if none.  The
/// dimension-7 subset U6 is empty as printed (its predicate forces
/// Lambda_3 = Lambda_4 while requiring Lambda_3 = 0, Lambda_4 != 0); after all
/// printed predicates fail, the ledger-corrected U6 predicate (without the
/// Lambda_3 = 0 condition) is tried before reporting Uncovered.  See errata
/// entry "dim7-U6-empty-predicate".
SubsetLabel subset_of(const ParamVector& p);

/// All printed subset names that p satisfies when each predicate is evaluated
/// independently (used by the audit's disjointness check).
std::vector<std::string> matching_subsets(const ParamVector& p);

/// Names of the subsets of a dimension, in the listed order (without F).
std::vector<std::string> subset_names(int dim);

/// Invariant tuple attached to a subset.  `errata_variant` is empty when the
/// printed formula was evaluated as printed; otherwise it names the errata
/// ledger entry explaining why a corrected (or merely annotated) formula was
/// involved.
struct Signature {
    SubsetLabel label;
    std::vector<GaussianRational> values;
    std::string errata_variant;

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.label == b.label && a.values == b.values;
    }
};

/// Signature of p under the governing proposition of its own subset.
/// Throws UncoveredInput when no printed predicate matches p.
Signature signature(const ParamVector& p);

/// Signature formula of a *given* subset evaluated at p, whether or not p lies
/// in that subset (used to derive canonical inversion maps on representative
/// families, several of which sit outside their own subset as printed).
Signature signature_for(const SubsetLabel& label, const ParamVector& p);

/// The formulas exactly as printed, with no errata substitutions; division by
/// zero surfaces as ZeroScale.  Used by the audit to witness ledger entries.
Signature signature_printed(const SubsetLabel& label, const ParamVector& p);

/// One representative family of the classification, e.g. "L(1,0,l1,l1,l2)".
struct FamilyInfo {
    int dim = 0;
    std::string subset;  // owning subset name ("U1".."U22" or "F")
    int arity = 0;       // number of lambda slots

    /// Display form with unfilled slots, e.g. "L(1,0,l1,l1,l2)".
    std::string to_string() const;
    /// Fill the lambda slots; |lambdas| must equal arity.
    ParamVector instantiate(const std::vector<GaussianRational>& lambdas) const;

    /// Entry encoding: lambda slot index (1-based) or 0 with a constant.
    struct Entry {
        GaussianRational constant;
        int lambda = 0;
    };
    std::vector<Entry> entries;  // beta_3..beta_n then gamma
};

/// The printed family list of the dimension (5 -> 5 families, 6 -> 9,
/// 7 -> 15, 8 -> 23).
std::vector<FamilyInfo> enumerate_classes(int dim);

/// Enumerated family count versus the closed-form count n^2 - 7n + 15.
struct CountResult {
    int dim = 0;
    int enumerated = 0;  // meaningful for dims 5..8 only
    long formula = 0;
    bool match = false;
};
CountResult class_count(int dim);

/// Canonical representative: family of the input's subset with the lambda
/// slots recovered from the signature through a generated affine inversion
/// map.  Throws NoRationalInverse when the subset's signature is not an
/// invertible affine function of the family parameters (the documented
/// dimension-8 U12/U13/U14 defects).
struct CanonicalClass {
    int dim = 0;
    std::string family;  // filled display form, e.g. "L(1,0,3)"
    FamilyInfo info;
    std::vector<GaussianRational> lambdas;
};
CanonicalClass canonical_form(const ParamVector& p);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Unknown };
std::string to_string(IsoVerdict v);

/// Exhaustive search over triples with numerators/denominators bounded by
/// `bound`; returns a verified witness or nothing.
std::optional<AdaptedTriple> find_witness(const ParamVector& p, const ParamVector& q, int bound = 3);

/// Signature-based decision for covered pairs; bounded witness search when
/// either side is Uncovered.
IsoVerdict iso_decide(const ParamVector& p, const ParamVector& q, int witness_bound = 3);

}  // namespace sleib
