// Acceptance gate: one line per criterion.  A criterion that cannot hold
// (the printed per-family separation claim, A8) is reported FAIL together
// with the ledger entries that explain it; it is never massaged to green.
//
// Usage: acceptance <errata.json> <python3> <golden_runner.py> <cli>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <set>

#include "sleib/audit.hpp"
#include "sleib/io.hpp"

using namespace sleib;

namespace {

int failures = 0;
int expected_red = 0;

void report(const std::string& id, bool pass, const std::string& detail,
            bool documented_red = false) {
    if (pass) {
        std::cout << id << "  PASS  " << detail << "\n";
    } else if (documented_red) {
        ++expected_red;
        std::cout << id << "  FAIL (documented)  " << detail << "\n";
    } else {
        ++failures;
        std::cout << id << "  FAIL  " << detail << "\n";
    }
}

bool a1_leibniz() {
    Sampler s(101);
    for (int dim = 5; dim <= 12; ++dim)
        for (int i = 0; i < 200; ++i)
            if (!leibniz_violations(build_table(s.param_vector(dim))).empty()) return false;
    return true;
}

bool a2_parameter_preservation() {
    Sampler s(102);
    for (int dim = 5; dim <= 9; ++dim) {
        const int n = dim - 1;
        for (int i = 0; i < 100; ++i) {
            ParamVector p = s.param_vector(dim);
            AlgebraTable t = build_table(p);
            auto preserved = [&](const BasisChange& bc) {
                return extract_params(transport(t, bc)) == p;
            };
            if (!preserved(elementary_sigma(t, s.pooled()))) return false;
            if (!preserved(elementary_eta(t, s.pooled(), n))) return false;
            int k = 2 + static_cast<int>(s.rng()() % (n - 3));  // 2..n-2
            if (!preserved(elementary_eta(t, s.pooled(), k))) return false;
        }
    }
    return true;
}

bool a3_group_laws() {
    Sampler s(103);
    for (int dim = 5; dim <= 9; ++dim)
        for (int i = 0; i < 100; ++i) {
            ParamVector p = s.param_vector(dim);
            if (transform_params(p, AdaptedTriple::identity()) != p) return false;
            AdaptedTriple t1 = s.triple(), t2 = s.triple();
            if (transform_params(transform_params(p, t1), t2) !=
                transform_params(p, triple_compose(t1, t2)))
                return false;
            if (transform_params(transform_params(p, t1), triple_invert(t1)) != p) return false;
        }
    return true;
}

bool a4_closed_form(const nlohmann::json& ledger, std::string& detail) {
    Sampler s(104);
    int printed_deviations = 0;
    for (int dim = 5; dim <= 9; ++dim)
        for (int i = 0; i < 500; ++i) {
            ParamVector p = s.param_vector(dim);
            AdaptedTriple t = s.triple();
            ParamVector oracle = transform_params(p, t);
            if (closed_form_transform(p, t) != oracle) {
                detail = "corrected closed form deviated at " + p.to_string();
                return false;
            }
            if (closed_form_transform(p, t, ClosedFormVariant::PrintedRho) != oracle)
                ++printed_deviations;
            if (closed_form_transform(p, t, ClosedFormVariant::PrintedEq2Outer) != oracle)
                ++printed_deviations;
        }
    // Every printed deviation must be a ledger entry carrying a witness.
    static const std::set<std::string> required = {
        "rho-beta-exponent", "rho-last-beta-missing-gamma", "rho-gamma-exponent",
        "eq2-parenthesization", "adapted-e2-coefficient", "gamma-prime-first-arg"};
    std::set<std::string> found;
    for (const auto& e : ledger.at("entries")) {
        const std::string id = e.at("id").get<std::string>();
        if (required.count(id) && !e.at("witness").empty()) found.insert(id);
    }
    if (found != required) {
        detail = "closed-form ledger entries incomplete";
        return false;
    }
    detail = "2500 oracle matches; " + std::to_string(printed_deviations) +
             " as-printed deviations, all under ledger witnesses";
    return true;
}

bool a5_counts(std::string& detail) {
    static const int expected[] = {5, 9, 15, 23};
    detail = "counts";
    for (int dim = 5; dim <= 8; ++dim) {
        CountResult c = class_count(dim);
        if (c.enumerated != expected[dim - 5] || !c.match) return false;
        detail += " " + std::to_string(c.enumerated);
    }
    detail += " match n^2-7n+15";
    return true;
}

bool a6_invariance(std::string& detail) {
    int explained_failures = 0;
    for (int dim = 5; dim <= 8; ++dim) {
        AuditReport r = invariance_audit(dim, 50, 20, 1);
        if (r.unexplained > 0) {
            detail = "dim " + std::to_string(dim) + ": " + std::to_string(r.unexplained) +
                     " failures outside the ledger";
            return false;
        }
        for (const SubsetAudit& a : r.subsets)
            if (a.failed()) ++explained_failures;
    }
    detail = "50x20 per subset; " + std::to_string(explained_failures) +
             " failing subsets, every one tied to a ledger entry";
    return true;
}

bool a7_canonical(std::string& detail) {
    // Label changes are tolerated only for the documented representative
    // swaps / merged subsets; signature values must round-trip exactly.
    static const std::set<std::string> dim8_refused = {"U12", "U13", "U14"};
    Sampler s(107);
    int refused = 0;
    for (int dim = 5; dim <= 8; ++dim) {
        int done = 0;
        while (done < 100) {
            ParamVector p = s.param_vector(dim);
            SubsetLabel lab = subset_of(p);
            if (!lab.covered()) continue;
            ++done;
            try {
                CanonicalClass c = canonical_form(p);
                ParamVector q = c.info.instantiate(c.lambdas);
                if (signature_for(lab, q).values != signature_for(lab, p).values) {
                    detail = "signature mismatch after round trip at " + p.to_string();
                    return false;
                }
            } catch (const NoRationalInverse&) {
                if (dim != 8 || !dim8_refused.count(lab.name)) {
                    detail = "unexpected refusal at " + p.to_string();
                    return false;
                }
                ++refused;  // documented: no invariant exists on these strata
            }
        }
    }
    detail = "100 covered points per dim; " + std::to_string(refused) +
             " refusals on the documented no-invariant strata";
    return true;
}

bool a8_separation(std::string& detail, bool& documented) {
    int iso = 0;
    bool ledger_ok = true;
    for (int dim = 5; dim <= 8; ++dim) {
        SeparationAudit r = separation_audit(dim);
        iso += static_cast<int>(r.isomorphic_pairs.size());
        if (!r.matches_ledger()) ledger_ok = false;
    }
    if (iso == 0) {
        detail = "all family representatives pairwise non-isomorphic";
        documented = false;
        return true;
    }
    documented = ledger_ok;
    detail = std::to_string(iso) +
             " representative pairs are isomorphic (dims 7-8 repeated classes); " +
             (ledger_ok ? "every pair matches the ledger"
                        : "PAIRS OUTSIDE THE LEDGER PRESENT");
    return false;
}

bool a9_coverage(std::string& detail) {
    for (int dim = 5; dim <= 8; ++dim) {
        CoverageReport a = coverage_report(dim, 2000, 1);
        CoverageReport b = coverage_report(dim, 2000, 1);
        if (a.uncovered != b.uncovered || a.gap_witnesses != b.gap_witnesses) {
            detail = "report not deterministic at dim " + std::to_string(dim);
            return false;
        }
        for (const auto& probe : a.probes)
            if (probe.covered) {
                detail = "expected gap point " + probe.point + " is covered";
                return false;
            }
        if (dim == 5) {
            bool found = false;
            for (const auto& probe : a.probes) found |= probe.point == "L(1,0,2)";
            if (!found || a.uncovered == 0) {
                detail = "dim 5 gap witness missing";
                return false;
            }
        }
    }
    detail = "deterministic per seed; known gap witnesses reproduced (dim 5: L(1,0,2))";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 5) {
        std::cerr << "usage: acceptance <errata.json> <python3> <golden_runner.py> <cli>\n";
        return 1;
    }
    std::ifstream in(argv[1]);
    nlohmann::json ledger;
    in >> ledger;

    std::string detail;
    report("A1", a1_leibniz(), "bracket satisfies the Leibniz identity, dims 5-12, 200 each");
    report("A2", a2_parameter_preservation(),
           "sigma/eta changes of basis preserve the parameters, dims 5-9, 100 each");
    report("A3", a3_group_laws(), "identity / composition / inverse laws, dims 5-9, 100 each");
    report("A4", a4_closed_form(ledger, detail), detail);
    report("A5", a5_counts(detail), detail);
    report("A6", a6_invariance(detail), detail);
    report("A7", a7_canonical(detail), detail);
    bool documented = false;
    bool a8 = a8_separation(detail, documented);
    report("A8", a8, detail, documented);
    report("A9", a9_coverage(detail), detail);

    std::string cmd = std::string(argv[2]) + " " + argv[3] + " " + argv[4];
    int rc = std::system(cmd.c_str());
    report("A10", rc == 0, "command line golden files byte-identical (text and JSON modes)");

    std::cout << (failures == 0 ? "acceptance: ok" : "acceptance: FAILING") << " ("
              << expected_red << " documented red)\n";
    return failures == 0 ? 0 : 1;
}
