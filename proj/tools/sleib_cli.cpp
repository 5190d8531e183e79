#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "sleib/audit.hpp"
#include "sleib/io.hpp"

using json = nlohmann::ordered_json;
using namespace sleib;

// Exit codes: 0 success, 1 error (bad input, internal failure), 2 finding
// (uncovered point, unknown verdict, a documented defect was exercised).
namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFinding = 2;

struct Options {
    bool json_out = false;
};

AdaptedTriple parse_triple(std::string text) {
    if (text.size() > 1 && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    std::vector<GaussianRational> parts;
    std::string tok;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            parts.push_back(parse_scalar(tok));
            tok.clear();
        } else {
            tok += text[i];
        }
    }
    if (parts.size() != 3) throw ParseError("expected a triple A,B,D: " + text);
    return {parts[0], parts[1], parts[2]};
}

std::string triple_str(const AdaptedTriple& t) {
    return "(" + format_scalar(t.A) + "," + format_scalar(t.B) + "," + format_scalar(t.D) + ")";
}

std::string join_values(const std::vector<GaussianRational>& vs) {
    std::string out;
    for (const auto& v : vs) {
        if (!out.empty()) out += ",";
        out += format_scalar(v);
    }
    return out;
}

json values_json(const std::vector<GaussianRational>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(format_scalar(v));
    return a;
}

void emit(const Options& opt, const json& j, const std::vector<std::string>& lines) {
    if (opt.json_out)
        std::cout << j.dump(2) << "\n";
    else
        for (const auto& line : lines) std::cout << line << "\n";
}

int cmd_verify(const Options& opt, const std::string& point) {
    ParamVector p = load_point(point);
    AlgebraTable t = build_table(p);
    auto violations = leibniz_violations(t);
    auto series = lower_central_dims(t);
    bool filiform = series == filiform_profile(p.dim);

    std::string series_str;
    for (int d : series) series_str += (series_str.empty() ? "" : ",") + std::to_string(d);
    json j = {{"point", p.to_string()},
              {"dim", p.dim},
              {"leibniz", violations.empty()},
              {"violations", violations.size()},
              {"lower_central", series},
              {"filiform", filiform}};
    emit(opt, j,
         {"point: " + p.to_string(), "dim: " + std::to_string(p.dim),
          std::string("leibniz: ") + (violations.empty() ? "ok" : "violated"),
          "lower-central: " + series_str, std::string("filiform: ") + (filiform ? "yes" : "no")});
    return violations.empty() && filiform ? kExitOk : kExitError;
}

int cmd_table(const Options& opt, const std::string& point) {
    ParamVector p = load_point(point);
    AlgebraTable t = build_table(p);
    json products = json::array();
    std::vector<std::string> lines = {"point: " + p.to_string()};
    for (int i = 0; i < t.dim(); ++i)
        for (int jdx = 0; jdx < t.dim(); ++jdx) {
            std::string rhs;
            for (int k = 0; k < t.dim(); ++k) {
                const GaussianRational& c = t.c(i, jdx, k);
                if (c.is_zero()) continue;
                std::string coeff = format_scalar(c);
                if (!rhs.empty()) rhs += " + ";
                rhs += (coeff == "1" ? "" : "(" + coeff + ")") + std::string("e") +
                       std::to_string(k);
            }
            if (rhs.empty()) continue;
            lines.push_back("[e" + std::to_string(i) + ",e" + std::to_string(jdx) + "] = " + rhs);
            json entry = {{"i", i}, {"j", jdx}, {"coeffs", json::array()}};
            for (int k = 0; k < t.dim(); ++k)
                if (!t.c(i, jdx, k).is_zero())
                    entry["coeffs"].push_back({{"k", k}, {"c", format_scalar(t.c(i, jdx, k))}});
            products.push_back(entry);
        }
    emit(opt, {{"point", p.to_string()}, {"dim", p.dim}, {"products", products}}, lines);
    return kExitOk;
}

int cmd_transform(const Options& opt, const std::string& point, const std::string& triple,
                  const std::string& mode, const std::string& variant_name) {
    ParamVector p = load_point(point);
    AdaptedTriple tr = parse_triple(triple);

    ClosedFormVariant variant = ClosedFormVariant::Corrected;
    std::string variant_errata;
    if (variant_name == "printed-rho") {
        variant = ClosedFormVariant::PrintedRho;
        variant_errata = "rho-beta-exponent;rho-last-beta-missing-gamma;rho-gamma-exponent";
    } else if (variant_name == "printed-eq2") {
        variant = ClosedFormVariant::PrintedEq2Outer;
        variant_errata = "eq2-parenthesization";
    }

    json j = {{"point", p.to_string()}, {"triple", triple_str(tr)}, {"mode", mode}};
    std::vector<std::string> lines = {"point: " + p.to_string(), "triple: " + triple_str(tr)};
    std::optional<ParamVector> oracle, closed;
    if (mode == "oracle" || mode == "both") {
        oracle = transform_params(p, tr);
        j["oracle"] = oracle->to_string();
        lines.push_back("oracle: " + oracle->to_string());
    }
    if (mode == "closed" || mode == "both") {
        closed = closed_form_transform(p, tr, variant);
        j["closed"] = closed->to_string();
        lines.push_back("closed: " + closed->to_string());
        if (!variant_errata.empty()) {
            j["errata"] = variant_errata;
            lines.push_back("errata: " + variant_errata);
        }
    }
    int rc = kExitOk;
    if (oracle && closed) {
        bool agree = *oracle == *closed;
        j["agreement"] = agree;
        lines.push_back(std::string("agreement: ") + (agree ? "yes" : "no"));
        if (!agree) rc = kExitFinding;
    }
    emit(opt, j, lines);
    return rc;
}

int cmd_classify(const Options& opt, const std::string& point) {
    ParamVector p = load_point(point);
    SubsetLabel label = subset_of(p);
    json j = {{"point", p.to_string()}, {"dim", p.dim}, {"subset", label.name}};
    std::vector<std::string> lines = {"point: " + p.to_string(),
                                      "subset: " + label.name + " (dim " +
                                          std::to_string(p.dim) + ")"};
    int rc = kExitOk;
    if (!label.covered()) {
        lines.back() = "subset: uncovered (dim " + std::to_string(p.dim) + ")";
        emit(opt, j, lines);
        return kExitFinding;
    }
    Signature sig = signature(p);
    j["signature"] = values_json(sig.values);
    lines.push_back("signature: " + (sig.values.empty() ? "()" : join_values(sig.values)));
    if (!sig.errata_variant.empty()) {
        j["errata"] = sig.errata_variant;
        lines.push_back("errata: " + sig.errata_variant);
        rc = kExitFinding;
    }
    try {
        CanonicalClass c = canonical_form(p);
        j["canonical"] = c.family;
        lines.push_back("canonical: " + c.family);
    } catch (const NoRationalInverse& e) {
        j["canonical"] = nullptr;
        j["canonical_error"] = e.what();
        lines.push_back(std::string("canonical: unavailable (") + e.what() + ")");
        rc = kExitFinding;
    }
    emit(opt, j, lines);
    return rc;
}

int cmd_iso(const Options& opt, const std::string& a, const std::string& b, bool want_witness,
            int bound) {
    ParamVector p = load_point(a);
    ParamVector q = load_point(b);
    IsoVerdict v = iso_decide(p, q, bound);
    json j = {{"left", p.to_string()}, {"right", q.to_string()}, {"verdict", to_string(v)}};
    std::vector<std::string> lines = {"left: " + p.to_string(), "right: " + q.to_string(),
                                      "verdict: " + to_string(v)};
    if (want_witness && v == IsoVerdict::Isomorphic) {
        if (auto w = find_witness(p, q, bound)) {
            j["witness"] = triple_str(*w);
            lines.push_back("witness: " + triple_str(*w));
        } else {
            j["witness"] = nullptr;
            lines.push_back("witness: none within bound " + std::to_string(bound));
        }
    }
    emit(opt, j, lines);
    return v == IsoVerdict::Unknown ? kExitFinding : kExitOk;
}

int cmd_enumerate(const Options& opt, int dim) {
    CountResult c = class_count(dim);
    json fams = json::array();
    std::vector<std::string> lines;
    for (const FamilyInfo& f : enumerate_classes(dim)) {
        lines.push_back(f.subset + ": " + f.to_string());
        fams.push_back({{"subset", f.subset}, {"family", f.to_string()}, {"arity", f.arity}});
    }
    lines.push_back("count: " + std::to_string(c.enumerated) + " (formula " +
                    std::to_string(c.formula) + ", " + (c.match ? "match" : "MISMATCH") + ")");
    emit(opt,
         {{"dim", dim},
          {"families", fams},
          {"count", c.enumerated},
          {"formula", c.formula},
          {"match", c.match}},
         lines);
    return c.match ? kExitOk : kExitError;
}

int cmd_count(const Options& opt, int dim) {
    CountResult c = class_count(dim);
    json j = {{"dim", dim}, {"formula", c.formula}};
    std::vector<std::string> lines;
    if (dim <= kMaxClassifyDim) {
        j["enumerated"] = c.enumerated;
        j["match"] = c.match;
        lines.push_back("dim " + std::to_string(dim) + ": " + std::to_string(c.enumerated) +
                        " classes (formula " + std::to_string(c.formula) + ", " +
                        (c.match ? "match" : "MISMATCH") + ")");
    } else {
        lines.push_back("dim " + std::to_string(dim) + ": " + std::to_string(c.formula) +
                        " classes (conjectured formula n^2 - 7n + 15)");
    }
    emit(opt, j, lines);
    return kExitOk;
}

int cmd_audit(const Options& opt, int dim, int samples, int triples, unsigned long long seed) {
    AuditReport inv = invariance_audit(dim, samples, triples, seed);
    SeparationAudit sep = separation_audit(dim);
    CoverageReport cov = coverage_report(dim, samples * 40, seed);

    json subsets = json::array();
    std::vector<std::string> lines = {"invariance audit: dim " + std::to_string(dim) +
                                      ", samples " + std::to_string(samples) + ", triples " +
                                      std::to_string(triples) + ", seed " +
                                      std::to_string(seed)};
    bool findings = false;
    for (const SubsetAudit& a : inv.subsets) {
        std::string line = a.subset + ": samples=" + std::to_string(a.samples) +
                           " membership_fail=" + std::to_string(a.membership_failures) +
                           " sig_fail=" + std::to_string(a.shipped_signature_failures) +
                           " printed_fail=" +
                           std::to_string(a.printed_signature_failures +
                                          a.printed_zero_denominators) +
                           " rep_in_subset=" + (a.representative_in_subset ? "yes" : "no");
        if (!a.sampled) line += " UNSAMPLED";
        if (!a.errata_id.empty()) line += " errata=" + a.errata_id;
        lines.push_back(line);
        if (a.failed()) findings = true;
        subsets.push_back({{"subset", a.subset},
                           {"samples", a.samples},
                           {"sampled", a.sampled},
                           {"membership_failures", a.membership_failures},
                           {"signature_failures", a.shipped_signature_failures},
                           {"printed_failures", a.printed_signature_failures},
                           {"printed_zero_denominators", a.printed_zero_denominators},
                           {"representative_in_subset", a.representative_in_subset},
                           {"errata", a.errata_id}});
    }
    lines.push_back("unexplained: " + std::to_string(inv.unexplained));

    lines.push_back("separation: pairs=" + std::to_string(sep.pairs_checked) + " isomorphic=" +
                    std::to_string(sep.isomorphic_pairs.size()) + " unexpected=" +
                    std::to_string(sep.unexpected_pairs.size()) + " missing=" +
                    std::to_string(sep.missing_pairs.size()) + " unknown=" +
                    std::to_string(sep.unknown_verdicts));
    for (const std::string& pair : sep.isomorphic_pairs) lines.push_back("  isomorphic: " + pair);
    if (!sep.isomorphic_pairs.empty()) findings = true;

    std::string cov_line = "coverage: samples=" + std::to_string(cov.samples) +
                           " uncovered=" + std::to_string(cov.uncovered);
    lines.push_back(cov_line);
    json probes = json::array();
    for (const auto& probe : cov.probes) {
        lines.push_back("  probe " + probe.point + ": " +
                        (probe.covered ? "covered" : "uncovered"));
        probes.push_back({{"point", probe.point}, {"covered", probe.covered}});
        if (!probe.covered) findings = true;
    }
    if (cov.uncovered > 0) findings = true;

    json j = {{"dim", dim},
              {"invariance",
               {{"samples", samples},
                {"triples", triples},
                {"seed", seed},
                {"subsets", subsets},
                {"unexplained", inv.unexplained}}},
              {"separation",
               {{"pairs", sep.pairs_checked},
                {"isomorphic", sep.isomorphic_pairs},
                {"unexpected", sep.unexpected_pairs},
                {"missing", sep.missing_pairs},
                {"unknown", sep.unknown_verdicts}}},
              {"coverage",
               {{"samples", cov.samples},
                {"uncovered", cov.uncovered},
                {"probes", probes}}}};
    emit(opt, j, lines);
    if (inv.unexplained > 0 || !sep.unexpected_pairs.empty() || !sep.missing_pairs.empty())
        return kExitError;
    return findings ? kExitFinding : kExitOk;
}

int cmd_random(const Options& opt, int dim, const std::string& subset, int count,
               unsigned long long seed) {
    Sampler sampler(seed);
    json points = json::array();
    std::vector<std::string> lines;
    for (int i = 0; i < count; ++i) {
        ParamVector p = subset.empty() ? sampler.param_vector(dim)
                                       : sampler.in_subset(dim, subset);
        lines.push_back(p.to_string());
        points.push_back(p.to_string());
    }
    emit(opt, {{"dim", dim}, {"subset", subset.empty() ? json(nullptr) : json(subset)},
               {"seed", seed}, {"points", points}},
         lines);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"second-class filiform Leibniz algebras: tables, transforms, classification"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_out, "structured JSON output");

    std::string point, point2, triple_arg, mode = "both", variant = "corrected", subset;
    int dim = 5, bound = 3, samples = 50, triples = 20, count = 1;
    unsigned long long seed = 1;
    bool want_witness = false;

    auto* verify = app.add_subcommand("verify", "check the bracket and the filiform profile");
    verify->add_option("point", point, "L(b3,...,bn,g) or a JSON file")->required();

    auto* table = app.add_subcommand("table", "print the nonzero products of the bracket");
    table->add_option("point", point)->required();

    auto* transform = app.add_subcommand("transform", "apply a change of basis (A,B,D)");
    transform->add_option("point", point)->required();
    transform->add_option("--triple", triple_arg, "A,B,D with AD != 0")->required();
    transform->add_option("--mode", mode)->check(CLI::IsMember({"oracle", "closed", "both"}));
    transform->add_option("--variant", variant, "closed-form reading")
        ->check(CLI::IsMember({"corrected", "printed-rho", "printed-eq2"}));

    auto* classify = app.add_subcommand("classify", "subset, signature and canonical form");
    classify->add_option("point", point)->required();

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two algebras");
    iso->add_option("left", point)->required();
    iso->add_option("right", point2)->required();
    iso->add_flag("--witness", want_witness, "search for an explicit change of basis");
    iso->add_option("--bound", bound, "numerator/denominator bound of the witness search");

    auto* enumerate = app.add_subcommand("enumerate", "list the representative families");
    enumerate->add_option("--dim", dim)->required()->check(CLI::Range(5, 8));

    auto* count_cmd = app.add_subcommand("count", "class count (enumerated and closed form)");
    count_cmd->add_option("--dim", dim)->required()->check(CLI::Range(kMinDim, kMaxDim));

    auto* audit = app.add_subcommand("audit", "orbit-invariance, separation and coverage audit");
    audit->add_option("--dim", dim)->required()->check(CLI::Range(5, 8));
    audit->add_option("--samples", samples);
    audit->add_option("--triples", triples);
    audit->add_option("--seed", seed);

    auto* random = app.add_subcommand("random", "sample parameter vectors");
    random->add_option("--dim", dim)->required()->check(CLI::Range(kMinDim, kMaxDim));
    random->add_option("--subset", subset, "constrain to a printed subset");
    random->add_option("--count", count);
    random->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(opt, point);
        if (table->parsed()) return cmd_table(opt, point);
        if (transform->parsed()) return cmd_transform(opt, point, triple_arg, mode, variant);
        if (classify->parsed()) return cmd_classify(opt, point);
        if (iso->parsed()) return cmd_iso(opt, point, point2, want_witness, bound);
        if (enumerate->parsed()) return cmd_enumerate(opt, dim);
        if (count_cmd->parsed()) return cmd_count(opt, dim);
        if (audit->parsed()) return cmd_audit(opt, dim, samples, triples, seed);
        if (random->parsed()) return cmd_random(opt, dim, subset, count, seed);
    } catch (const SubsetEmpty& e) {
        std::cerr << "finding: " << e.what() << "\n";
        return kExitFinding;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
