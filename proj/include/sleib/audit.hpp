#pragma once

#include "sleib/sample.hpp"

namespace sleib {

/// Per-subset result of the orbit-invariance audit: in-subset samples are
/// pushed through random changes of basis and membership plus signature
/// constancy are checked, for both the printed and the shipped formulas.
/// Failures are expected on the documented defects only; `errata_id` names
/// the ledger entry that explains them, and `explained()` is false exactly
/// when something failed that the ledger does not cover.
struct SubsetAudit {
    std::string subset;
    int samples = 0;
    int triples = 0;
    bool sampled = true;  // false when no point of the printed predicate was found
    bool representative_in_subset = false;
    int membership_failures = 0;
    int shipped_signature_failures = 0;
    int printed_signature_failures = 0;
    int printed_zero_denominators = 0;
    int overlap_hits = 0;
    std::string errata_id;
    std::string first_witness;

    bool failed() const {
        return membership_failures || shipped_signature_failures || printed_signature_failures ||
               printed_zero_denominators || overlap_hits || !sampled ||
               !representative_in_subset;
    }
    bool explained() const { return !failed() || !errata_id.empty(); }
};

struct AuditReport {
    int dim = 0;
    int samples = 0;
    int triples = 0;
    unsigned long long seed = 0;
    std::vector<SubsetAudit> subsets;
    int unexplained = 0;

    bool clean() const { return unexplained == 0; }
};

AuditReport invariance_audit(int dim, int samples = 50, int triples = 20,
                             unsigned long long seed = 1);

/// Pairwise iso_decide over all printed representatives (lambda slots filled
/// at three fixed rational tuples).  The printed classification claims every
/// distinct pair is non-isomorphic; the pairs that are isomorphic anyway are
/// reported and compared against the documented repeated-class defects.
struct SeparationAudit {
    int dim = 0;
    int pairs_checked = 0;
    std::vector<std::string> isomorphic_pairs;   // all violations found
    std::vector<std::string> unexpected_pairs;   // violations the ledger does not cover
    std::vector<std::string> missing_pairs;      // documented violations not reproduced
    int unknown_verdicts = 0;

    bool matches_ledger() const {
        return unexpected_pairs.empty() && missing_pairs.empty() && unknown_verdicts == 0;
    }
};

SeparationAudit separation_audit(int dim);

/// Seeded sampling of the degenerate-rich parameter pool, reporting how often
/// no printed predicate matches, plus deterministic probes at the known gap
/// points of each dimension.
struct CoverageReport {
    int dim = 0;
    int samples = 0;
    unsigned long long seed = 0;
    int uncovered = 0;
    std::vector<std::string> gap_witnesses;  // first few uncovered samples

    struct Probe {
        std::string point;
        bool covered = false;
    };
    std::vector<Probe> probes;
};

CoverageReport coverage_report(int dim, int samples = 2000, unsigned long long seed = 1);

}  // namespace sleib
