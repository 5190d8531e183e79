#include "sleib/audit.hpp"

#include <map>
#include <set>

namespace sleib {

namespace {

using GR = GaussianRational;

std::string triple_str(const AdaptedTriple& t) {
    return "(" + format_scalar(t.A) + "," + format_scalar(t.B) + "," + format_scalar(t.D) + ")";
}

// Ledger entries that explain the known defects, keyed by failure kind.
std::string membership_errata(int dim, const std::string& s) {
    // Subsets merged into a larger orbit by the gamma feed into the last beta
    // (or beta_6): membership can move to the partner subset, generically for
    // the zero-side predicates and on a thin set of y for the nonzero side.
    if (dim == 7) {
        static const std::set<std::string> unstable = {"U8", "U10", "U12", "U14"};
        if (unstable.count(s)) return "dim7-repeated-classes";
    }
    if (dim == 8) {
        static const std::set<std::string> unstable = {"U7",  "U8",  "U9",  "U10",
                                                       "U13", "U14", "U15", "U16",
                                                       "U17", "U18", "U20", "U22"};
        if (unstable.count(s)) return "dim8-repeated-classes";
    }
    return "";
}

std::string printed_sig_errata(int dim, const std::string& s) {
    if (dim == 7 && s == "U3") return "dim7-U3-invariant";
    if (dim == 8) {
        if (s == "U3") return "dim8-U3-invariant";
        if (s == "U7") return "dim8-U7-invariant";
        if (s == "U8") return "dim8-U8-invariant";
        if (s == "U12") return "dim8-U12-no-invariant";
        if (s == "U13" || s == "U14") return "dim8-U13-U14-no-invariant";
    }
    return "";
}

std::string shipped_sig_errata(int dim, const std::string& s) {
    if (dim == 8 && s == "U12") return "dim8-U12-no-invariant";
    if (dim == 8 && (s == "U13" || s == "U14")) return "dim8-U13-U14-no-invariant";
    return "";
}

std::string rep_errata(int dim, const std::string& s) {
    if (dim == 5 && (s == "U4" || s == "F")) return "dim5-U4-F-swap";
    if (dim == 7 && (s == "U8" || s == "U10" || s == "U12" || s == "U14"))
        return "dim7-rep-swaps";
    if (dim == 8) {
        static const std::set<std::string> swapped = {"U7",  "U8",  "U9",  "U10", "U13", "U14",
                                                      "U15", "U16", "U17", "U18", "U20", "U22"};
        if (swapped.count(s)) return "dim8-rep-swaps";
    }
    return "";
}

const std::vector<GR>& rep_lambdas() {
    static const std::vector<GR> base = {GR(5), GR(7, 2), GR(9, 4)};
    return base;
}

const FamilyInfo& family_by_name(int dim, const std::string& subset) {
    static std::map<std::pair<int, std::string>, FamilyInfo> cache;
    if (cache.empty())
        for (int d = 5; d <= 8; ++d)
            for (const FamilyInfo& f : enumerate_classes(d))
                cache.emplace(std::make_pair(d, f.subset), f);
    return cache.at({dim, subset});
}

}  // namespace

AuditReport invariance_audit(int dim, int samples, int triples, unsigned long long seed) {
    AuditReport report;
    report.dim = dim;
    report.samples = samples;
    report.triples = triples;
    report.seed = seed;
    Sampler sampler(seed);

    for (const std::string& name : subset_names(dim)) {
        SubsetAudit a;
        a.subset = name;
        a.triples = triples;
        SubsetLabel lab{dim, name};

        const FamilyInfo& fam = family_by_name(dim, name);
        std::vector<GR> base(rep_lambdas().begin(), rep_lambdas().begin() + fam.arity);
        a.representative_in_subset = subset_of(fam.instantiate(base)).name == name;

        for (int i = 0; i < samples; ++i) {
            ParamVector p = [&]() -> ParamVector {
                try {
                    return sampler.in_subset(dim, name);
                } catch (const SubsetEmpty&) {
                    a.sampled = false;
                    return ParamVector(dim, std::vector<GR>(dim - 3), GR(0));
                }
            }();
            if (!a.sampled) break;
            ++a.samples;
            if (matching_subsets(p).size() > 1) ++a.overlap_hits;

            Signature shipped0 = signature_for(lab, p);
            std::optional<Signature> printed0;
            try {
                printed0 = signature_printed(lab, p);
            } catch (const ZeroScale&) {
                ++a.printed_zero_denominators;
            }

            for (int j = 0; j < triples; ++j) {
                AdaptedTriple t = sampler.triple();
                ParamVector pq = transform_params(p, t);
                if (subset_of(pq).name != name) {
                    ++a.membership_failures;
                    if (a.first_witness.empty())
                        a.first_witness = p.to_string() + " -> " + triple_str(t) + " -> " +
                                          pq.to_string() + " [" + subset_of(pq).name + "]";
                    continue;
                }
                if (signature_for(lab, pq).values != shipped0.values) {
                    ++a.shipped_signature_failures;
                    if (a.first_witness.empty())
                        a.first_witness =
                            p.to_string() + " -> " + triple_str(t) + " -> " + pq.to_string();
                }
                if (printed0) {
                    try {
                        if (signature_printed(lab, pq).values != printed0->values)
                            ++a.printed_signature_failures;
                    } catch (const ZeroScale&) {
                        ++a.printed_zero_denominators;
                    }
                }
            }
        }

        // Tie every observed failure kind to its ledger entry; anything the
        // ledger does not cover counts as unexplained.
        std::set<std::string> ids;
        auto need = [&](bool failing, const std::string& id) {
            if (!failing) return;
            if (id.empty())
                ++report.unexplained;
            else
                ids.insert(id);
        };
        need(a.membership_failures > 0, membership_errata(dim, name));
        need(a.shipped_signature_failures > 0, shipped_sig_errata(dim, name));
        need(a.printed_signature_failures > 0 || a.printed_zero_denominators > 0,
             printed_sig_errata(dim, name));
        need(!a.representative_in_subset, rep_errata(dim, name));
        need(!a.sampled, dim == 7 && name == "U6" ? "dim7-U6-empty-predicate" : "");
        need(a.overlap_hits > 0, "");
        if (dim == 7 && name == "U6") ids.insert("dim7-U6-empty-predicate");
        for (const std::string& id : ids) {
            if (!a.errata_id.empty()) a.errata_id += ";";
            a.errata_id += id;
        }
        report.subsets.push_back(std::move(a));
    }
    return report;
}

SeparationAudit separation_audit(int dim) {
    SeparationAudit out;
    out.dim = dim;

    struct Item {
        std::string subset;
        int tuple = 0;
        ParamVector p;
    };
    static const std::vector<std::vector<GR>> tuples = {
        {GR(5), GR(7, 2), GR(9, 4)}, {GR(3), GR(4), GR(2)}, {GR(9, 7), GR(1, 2), GR(6)}};
    std::vector<Item> items;
    for (const FamilyInfo& f : enumerate_classes(dim)) {
        const int variants = f.arity == 0 ? 1 : static_cast<int>(tuples.size());
        for (int v = 0; v < variants; ++v) {
            std::vector<GR> ls(tuples[v].begin(), tuples[v].begin() + f.arity);
            items.push_back({f.subset, v, f.instantiate(ls)});
        }
    }

    auto expected_iso = [&](const Item& a, const Item& b) {
        auto pairin = [&](const char* x, const char* y) {
            return (a.subset == x && b.subset == y) || (a.subset == y && b.subset == x);
        };
        if (dim == 7) return pairin("U8", "U10") || pairin("U12", "U14");
        if (dim == 8) {
            if (pairin("U15", "U17") || pairin("U16", "U18") || pairin("U20", "U22")) return true;
            auto merged = [](const std::string& s) { return s == "U13" || s == "U14"; };
            if (merged(a.subset) && merged(b.subset)) return true;
            if (a.subset == "U12" && b.subset == "U12") return true;
        }
        return false;
    };

    for (size_t i = 0; i < items.size(); ++i) {
        for (size_t j = i + 1; j < items.size(); ++j) {
            ++out.pairs_checked;
            IsoVerdict v = iso_decide(items[i].p, items[j].p);
            std::string tag = items[i].subset + "#" + std::to_string(items[i].tuple) + "~" +
                              items[j].subset + "#" + std::to_string(items[j].tuple);
            bool expected = expected_iso(items[i], items[j]);
            if (v == IsoVerdict::Unknown) ++out.unknown_verdicts;
            if (v == IsoVerdict::Isomorphic) {
                out.isomorphic_pairs.push_back(tag);
                if (!expected) out.unexpected_pairs.push_back(tag);
            } else if (expected) {
                out.missing_pairs.push_back(tag);
            }
        }
    }
    return out;
}

CoverageReport coverage_report(int dim, int samples, unsigned long long seed) {
    CoverageReport r;
    r.dim = dim;
    r.samples = samples;
    r.seed = seed;
    Sampler s(seed);
    for (int i = 0; i < samples; ++i) {
        ParamVector p = s.param_vector(dim);
        if (!subset_of(p).covered()) {
            ++r.uncovered;
            if (r.gap_witnesses.size() < 5) r.gap_witnesses.push_back(p.to_string());
        }
    }
    auto probe = [&](std::initializer_list<long> beta, long gamma) {
        std::vector<GR> b;
        for (long v : beta) b.push_back(GR(v));
        ParamVector p(dim, std::move(b), GR(gamma));
        r.probes.push_back({p.to_string(), subset_of(p).covered()});
    };
    switch (dim) {
        case 5: probe({1, 0}, 2); break;
        case 6: break;  // the printed predicates cover this dimension
        case 7: probe({1, 0, 1, 0}, 0); break;
        case 8:
            probe({0, 0, 1, 0, 0}, 0);
            probe({0, 0, 0, 1, 0}, 0);
            probe({1, 0, 0, 0, 1}, 0);
            break;
        default: throw UnsupportedDim("coverage report covers dimensions 5..8 only");
    }
    return r;
}

}  // namespace sleib
