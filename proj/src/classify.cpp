#include "sleib/classify.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "subset_defs.hpp"

namespace sleib {

namespace {

using GR = GaussianRational;

GR pw(const GR& x, long e) { return x.pow(e); }

}  // namespace

const GaussianRational& LambdaSet::at(int k) const {
    if (k < 1 || k > 7 || !values[k - 1].has_value())
        throw IndexOutOfRange("Lambda_" + std::to_string(k) + " is undefined for this dimension");
    return *values[k - 1];
}

LambdaSet lambda_values(const ParamVector& p) {
    LambdaSet ls;
    const int n = p.n();
    const GR b3 = p.beta_at(3), b4 = p.beta_at(4);
    const GR& g = p.gamma;
    if (n >= 5) {
        const GR b5 = p.beta_at(5);
        ls.values[0] = GR(4) * b3 * b5 - GR(5) * b4 * b4;
        if (n >= 6) {
            const GR b6 = p.beta_at(6);
            ls.values[1] = GR(2) * b3 * b3 * b6 - GR(6) * b3 * b4 * b5 + b4 * g + GR(4) * pw(b4, 3);
            ls.values[2] = GR(4) * b3 * b3 * b6 + GR(2) * b4 * g - GR(7) * pw(b4, 3);
            ls.values[3] = GR(4) * b3 * b3 * b6 - GR(7) * pw(b4, 3);
            ls.values[4] = b3 * b3 * b6 - GR(3) * b3 * b4 * b5 + GR(2) * pw(b4, 3);
            if (n >= 7) {
                const GR b7 = p.beta_at(7);
                ls.values[5] = GR(4) * b3 * b4 * g + GR(8) * pw(b3, 3) * b7 -
                               GR(28) * b3 * b3 * b4 * b6 + GR(28) * pw(b4, 4);
                ls.values[6] =
                    GR(4) * b3 * b4 * g + GR(8) * pw(b3, 3) * b7 - GR(21) * pw(b4, 4);
            }
        }
    }
    return ls;
}

namespace detail {

GR quantity(Q q, const ParamVector& p, const LambdaSet& ls) {
    switch (q) {
        case Q::B3: return p.beta_at(3);
        case Q::B4: return p.beta_at(4);
        case Q::B5: return p.beta_at(5);
        case Q::B6: return p.beta_at(6);
        case Q::B7: return p.beta_at(7);
        case Q::G: return p.gamma;
        case Q::G2B3: return p.gamma - GR(2) * p.beta_at(3) * p.beta_at(3);
        case Q::G3B4: return p.gamma - GR(3) * p.beta_at(4) * p.beta_at(4);
        case Q::L1: return ls.at(1);
        case Q::L2: return ls.at(2);
        case Q::L3: return ls.at(3);
        case Q::L4: return ls.at(4);
        case Q::L5: return ls.at(5);
        case Q::L6: return ls.at(6);
        case Q::L7: return ls.at(7);
    }
    throw Error("unreachable");
}

bool matches(const SubsetDef& def, const ParamVector& p, const LambdaSet& ls) {
    for (const Atom& a : def.atoms) {
        if (quantity(a.q, p, ls).is_zero() != a.zero) return false;
    }
    return true;
}

const std::vector<SubsetDef>& subset_defs(int dim) {
    auto eq = [](Q q) { return Atom{q, true}; };
    auto ne = [](Q q) { return Atom{q, false}; };
    static const std::vector<SubsetDef> d5 = {
        {"U1", {ne(Q::B3), ne(Q::G2B3)}},
        {"U2", {ne(Q::B3), eq(Q::G2B3), ne(Q::B4)}},
        {"U3", {eq(Q::B3), ne(Q::G)}},
        {"U4", {eq(Q::B3), eq(Q::G), eq(Q::B4)}},
        {"F", {eq(Q::B3), eq(Q::G), ne(Q::B4)}},
    };
    static const std::vector<SubsetDef> d6 = {
        {"U1", {ne(Q::B3), ne(Q::G)}},
        {"U2", {ne(Q::B3), eq(Q::G), ne(Q::L1)}},
        {"U3", {ne(Q::B3), eq(Q::G), eq(Q::L1)}},
        {"U4", {eq(Q::B3), ne(Q::B4), ne(Q::G)}},
        {"U5", {eq(Q::B3), ne(Q::B4), eq(Q::G), ne(Q::B5)}},
        {"U6", {eq(Q::B3), ne(Q::B4), eq(Q::G), eq(Q::B5)}},
        {"U7", {eq(Q::B3), eq(Q::B4), ne(Q::G)}},
        {"U8", {eq(Q::B3), eq(Q::B4), eq(Q::G), ne(Q::B5)}},
        {"F", {eq(Q::B3), eq(Q::B4), eq(Q::G), eq(Q::B5)}},
    };
    static const std::vector<SubsetDef> d7 = {
        {"U1", {ne(Q::B3), ne(Q::L1), ne(Q::L2)}},
        {"U2", {ne(Q::B3), ne(Q::L1), eq(Q::L2), ne(Q::G)}},
        {"U3", {ne(Q::B3), eq(Q::L1), ne(Q::L3), ne(Q::G)}},
        {"U4", {eq(Q::B3), ne(Q::B4), ne(Q::B5)}},
        {"U5", {eq(Q::B3), ne(Q::B4), eq(Q::B5), ne(Q::G3B4)}},
        {"U6", {ne(Q::B3), eq(Q::L1), eq(Q::L3), eq(Q::G), ne(Q::L4)}},
        {"U7", {eq(Q::B3), ne(Q::B4), eq(Q::B5), eq(Q::G3B4)}},
        {"U8", {eq(Q::B3), eq(Q::B4), ne(Q::B5), ne(Q::B6), ne(Q::G)}},
        {"U9", {eq(Q::B3), eq(Q::B4), ne(Q::B5), ne(Q::B6), eq(Q::G)}},
        {"U10", {eq(Q::B3), eq(Q::B4), ne(Q::B5), eq(Q::B6), ne(Q::G)}},
        {"U11", {eq(Q::B3), eq(Q::B4), ne(Q::B5), eq(Q::B6), eq(Q::G)}},
        {"U12", {eq(Q::B3), eq(Q::B4), eq(Q::B5), ne(Q::B6), ne(Q::G)}},
        {"U13", {eq(Q::B3), eq(Q::B4), eq(Q::B5), ne(Q::B6), eq(Q::G)}},
        {"U14", {eq(Q::B3), eq(Q::B4), eq(Q::B5), eq(Q::B6), ne(Q::G)}},
        {"F", {eq(Q::B3), eq(Q::B4), eq(Q::B5), eq(Q::B6), eq(Q::G)}},
        // U6 as printed is empty: with gamma = 0 the conditions Lambda_3 = 0
        // and Lambda_4 != 0 contradict (Lambda_3 = Lambda_4 when gamma = 0).
        // Ledger entry "dim7-U6-empty-predicate" drops Lambda_3 = 0.
        {"U6", {ne(Q::B3), eq(Q::L1), eq(Q::G), ne(Q::L4)}, true},
    };
    static const std::vector<SubsetDef> d8 = {
        {"U1", {ne(Q::B3), ne(Q::L1), ne(Q::L5)}},
        {"U2", {ne(Q::B3), ne(Q::L1), eq(Q::L5), ne(Q::G)}},
        {"U3", {ne(Q::B3), ne(Q::L1), eq(Q::L5), eq(Q::G)}},
        {"U4", {ne(Q::B3), eq(Q::L1), ne(Q::L4), ne(Q::L6)}},
        {"U5", {ne(Q::B3), eq(Q::L1), ne(Q::L4), eq(Q::L6)}},
        {"U6", {ne(Q::B3), eq(Q::L1), eq(Q::L4), ne(Q::G), ne(Q::L7)}},
        {"U7", {eq(Q::B3), ne(Q::B4), ne(Q::B5), ne(Q::B6)}},
        {"U8", {eq(Q::B3), ne(Q::B4), ne(Q::B5), eq(Q::B6)}},
        {"U9", {eq(Q::B3), ne(Q::B4), eq(Q::B5), ne(Q::B6), ne(Q::G)}},
        {"U10", {eq(Q::B3), ne(Q::B4), eq(Q::B5), eq(Q::B6), ne(Q::G)}},
        {"U11", {eq(Q::B3), eq(Q::B4), ne(Q::B5), ne(Q::B6)}},
        {"U12", {eq(Q::B3), eq(Q::B4), ne(Q::B5), eq(Q::B6), eq(Q::G), ne(Q::B7)}},
        {"U13", {eq(Q::B3), eq(Q::B4), eq(Q::B5), ne(Q::B6), ne(Q::G), ne(Q::B7)}},
        {"U14", {eq(Q::B3), eq(Q::B4), eq(Q::B5), ne(Q::B6), ne(Q::G), eq(Q::B7)}},
        {"U15", {eq(Q::B3), ne(Q::B4), eq(Q::B5), ne(Q::B6), eq(Q::G), ne(Q::B7)}},
        {"U16", {eq(Q::B3), ne(Q::B4), eq(Q::B5), ne(Q::B6), eq(Q::G), eq(Q::B7)}},
        {"U17", {eq(Q::B3), ne(Q::B4), eq(Q::B5), eq(Q::B6), eq(Q::G), ne(Q::B7)}},
        {"U18", {eq(Q::B3), ne(Q::B4), eq(Q::B5), eq(Q::B6), eq(Q::G), eq(Q::B7)}},
        {"U19", {eq(Q::B3), eq(Q::B4), ne(Q::B5), eq(Q::B6), ne(Q::G)}},
        {"U20", {eq(Q::B3), eq(Q::B4), eq(Q::B5), eq(Q::B6), ne(Q::B7), ne(Q::G)}},
        {"U21", {eq(Q::B3), eq(Q::B4), eq(Q::B5), eq(Q::B6), ne(Q::B7), eq(Q::G)}},
        {"U22", {eq(Q::B3), eq(Q::B4), eq(Q::B5), eq(Q::B6), eq(Q::B7), ne(Q::G)}},
        {"F", {eq(Q::B3), eq(Q::B4), eq(Q::B5), eq(Q::B6), eq(Q::B7), eq(Q::G)}},
    };
    switch (dim) {
        case 5: return d5;
        case 6: return d6;
        case 7: return d7;
        case 8: return d8;
    }
    throw UnsupportedDim("classification covers dimensions 5..8 only");
}

}  // namespace detail

using detail::matches;
using detail::SubsetDef;
using detail::subset_defs;

SubsetLabel subset_of(const ParamVector& p) {
    const auto& defs = subset_defs(p.dim);
    const LambdaSet ls = lambda_values(p);
    for (const SubsetDef& def : defs) {
        if (def.errata_fallback) continue;
        if (matches(def, p, ls)) return {p.dim, def.name};
    }
    for (const SubsetDef& def : defs) {
        if (def.errata_fallback && matches(def, p, ls)) return {p.dim, def.name};
    }
    return {p.dim, "Uncovered"};
}

std::vector<std::string> matching_subsets(const ParamVector& p) {
    const auto& defs = subset_defs(p.dim);
    const LambdaSet ls = lambda_values(p);
    std::vector<std::string> out;
    for (const SubsetDef& def : defs) {
        if (!def.errata_fallback && matches(def, p, ls)) out.push_back(def.name);
    }
    return out;
}

std::vector<std::string> subset_names(int dim) {
    std::vector<std::string> out;
    for (const SubsetDef& def : subset_defs(dim)) {
        if (!def.errata_fallback) out.push_back(def.name);
    }
    return out;
}

namespace {

// Signature formulas.  `printed` selects the formulas exactly as printed
// (which may divide by zero or fail orbit invariance); otherwise the shipped
// forms are used and `variant` names the governing errata entry when the
// shipped form is not the printed one (or is printed but known defective).
std::vector<GR> sig_values(const SubsetLabel& lab, const ParamVector& p, bool printed,
                           std::string& variant) {
    const LambdaSet ls = lambda_values(p);
    const GR& g = p.gamma;
    auto b = [&](int t) { return p.beta_at(t); };
    auto L = [&](int k) { return ls.at(k); };
    const int dim = lab.dim;
    const std::string& s = lab.name;
    variant.clear();

    if (dim == 5) {
        if (s == "U1") return {g / pw(b(3), 2)};
        return {};
    }
    if (dim == 6) {
        if (s == "U1") return {(GR(2) * b(3) * b(4) * g + b(3) * b(3) * L(1)) / pw(g, 2)};
        return {};
    }
    if (dim == 7) {
        if (s == "U1") return {pw(L(1), 3) / pw(L(2), 2), g * pw(L(1), 2) / pw(L(2), 2)};
        if (s == "U2") return {g / L(1)};
        if (s == "U3") {
            if (printed) return {pw(g, 3) / pw(L(1), 2)};  // Lambda_1 = 0 on U3
            variant = "dim7-U3-invariant";
            return {pw(g, 3) / pw(L(3), 2)};
        }
        if (s == "U4" || s == "U5") return {g / pw(b(4), 2)};
        return {};
    }
    // dim == 8
    if (s == "U1")
        return {pw(L(1), 3) / pw(L(5), 2),
                pw(L(1), 4) * (L(7) - GR(28) * b(4) * L(5) - GR(14) * b(4) * b(4) * L(1)) /
                    pw(L(5), 4),
                b(3) * g * pw(L(1), 3) / pw(L(5), 3)};
    if (s == "U2")
        return {pw(L(1), 3) / (pw(b(3), 2) * pw(g, 2)),
                pw(L(1), 4) * (L(7) - GR(14) * b(4) * b(4) * L(1)) / (pw(b(3), 4) * pw(g, 4))};
    if (s == "U3") {
        const GR core = L(7) - GR(14) * b(4) * b(4) * L(1) - GR(4) * b(3) * b(4) * g;
        if (printed) return {pw(L(1), 4) * core / pw(L(1), 2)};
        variant = "dim8-U3-invariant";
        return {core / pw(L(1), 2)};
    }
    if (s == "U4") return {pw(L(4), 4) / pw(L(6), 3), b(3) * g * pw(L(4), 3) / pw(L(6), 3)};
    if (s == "U5") return {b(3) * g / L(4)};
    if (s == "U6") return {pw(b(3), 4) * pw(g, 4) / pw(L(7), 3)};
    if (s == "U7") {
        const GR second = g / (b(4) * b(5));
        if (printed)
            return {(b(5) * b(6) * g + GR(3) * b(4) * b(4) * b(7) -
                     GR(7) * b(4) * pw(b(5), 2) * b(6)) /
                        pw(b(5), 3),
                    second};
        variant = "dim8-U7-invariant";
        return {(b(6) * g + GR(3) * b(4) * b(4) * b(7) - GR(7) * b(4) * b(5) * b(6)) /
                    pw(b(5), 3),
                second};
    }
    if (s == "U8") {
        // The printed numerator mixes terms of different scaling weight and is
        // not an orbit invariant; the U7 pair is complete on the merged
        // U7/U8 stratum and is shipped for both subsets.
        if (printed)
            return {(b(4) * b(5) * g + GR(3) * b(4) * b(4) * b(7) +
                     GR(7) * b(4) * b(4) * pw(b(5), 2)) /
                        pw(b(5), 3),
                    g / (b(4) * b(5))};
        variant = "dim8-U8-invariant";
        return {(b(6) * g + GR(3) * b(4) * b(4) * b(7) - GR(7) * b(4) * b(5) * b(6)) /
                    pw(b(5), 3),
                g / (b(4) * b(5))};
    }
    if (s == "U9") return {pw(b(4), 3) * (b(6) * g + GR(3) * b(4) * b(4) * b(7)) / pw(g, 3)};
    if (s == "U10") return {(pw(b(4), 5) * b(7) + pw(g, 3)) / pw(g, 3)};
    if (s == "U11") return {b(6) * g / pw(b(5), 3)};
    if (s == "U12") {
        if (!printed) variant = "dim8-U12-no-invariant";
        return {pw(b(7), 3) / pw(b(5), 5)};
    }
    if (s == "U13" || s == "U14") {
        if (!printed) variant = "dim8-U13-U14-no-invariant";
        return {b(6) / pw(g, 2)};
    }
    return {};
}

}  // namespace

Signature signature_for(const SubsetLabel& label, const ParamVector& p) {
    if (label.dim != p.dim) throw DimensionMismatch("label/parameter dimension mismatch");
    Signature sig;
    sig.label = label;
    sig.values = sig_values(label, p, /*printed=*/false, sig.errata_variant);
    return sig;
}

Signature signature_printed(const SubsetLabel& label, const ParamVector& p) {
    if (label.dim != p.dim) throw DimensionMismatch("label/parameter dimension mismatch");
    Signature sig;
    sig.label = label;
    std::string ignored;
    sig.values = sig_values(label, p, /*printed=*/true, ignored);
    return sig;
}

Signature signature(const ParamVector& p) {
    SubsetLabel lab = subset_of(p);
    if (!lab.covered())
        throw UncoveredInput("no printed subset predicate matches " + p.to_string());
    return signature_for(lab, p);
}

namespace {

FamilyInfo make_family(int dim, const char* subset, const char* pattern) {
    FamilyInfo f;
    f.dim = dim;
    f.subset = subset;
    std::stringstream ss(pattern);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        FamilyInfo::Entry e;
        if (tok[0] == 'l') {
            e.lambda = tok.size() > 1 ? std::stoi(tok.substr(1)) : 1;
            f.arity = std::max(f.arity, e.lambda);
        } else {
            e.constant = parse_scalar(tok);
        }
        f.entries.push_back(std::move(e));
    }
    if (static_cast<int>(f.entries.size()) != dim - 2)
        throw Error("family pattern length mismatch");
    return f;
}

}  // namespace

std::string FamilyInfo::to_string() const {
    std::string out = "L(";
    bool first = true;
    for (const Entry& e : entries) {
        if (!first) out += ",";
        first = false;
        if (e.lambda > 0)
            out += arity == 1 ? std::string("l") : "l" + std::to_string(e.lambda);
        else
            out += format_scalar(e.constant);
    }
    return out + ")";
}

ParamVector FamilyInfo::instantiate(const std::vector<GaussianRational>& lambdas) const {
    if (static_cast<int>(lambdas.size()) != arity)
        throw DimensionMismatch("family expects " + std::to_string(arity) + " parameters");
    std::vector<GR> vals;
    for (const Entry& e : entries) vals.push_back(e.lambda > 0 ? lambdas[e.lambda - 1] : e.constant);
    GR gamma = vals.back();
    vals.pop_back();
    return ParamVector(dim, std::move(vals), std::move(gamma));
}

std::vector<FamilyInfo> enumerate_classes(int dim) {
    switch (dim) {
        case 5:
            return {make_family(5, "U1", "1,0,l"), make_family(5, "U2", "1,1,2"),
                    make_family(5, "U3", "0,0,1"), make_family(5, "U4", "0,1,0"),
                    make_family(5, "F", "0,0,0")};
        case 6:
            return {make_family(6, "U1", "1,0,l,1"), make_family(6, "U2", "1,0,1,0"),
                    make_family(6, "U3", "1,0,0,0"), make_family(6, "U4", "0,1,0,1"),
                    make_family(6, "U5", "0,1,1,0"), make_family(6, "U6", "0,1,0,0"),
                    make_family(6, "U7", "0,0,0,1"), make_family(6, "U8", "0,0,1,0"),
                    make_family(6, "F", "0,0,0,0")};
        case 7:
            return {make_family(7, "U1", "1,0,l1,l1,l2"), make_family(7, "U2", "1,0,1,0,l"),
                    make_family(7, "U3", "1,0,0,l,l"),    make_family(7, "U4", "0,1,1,0,l"),
                    make_family(7, "U5", "0,1,0,0,l"),    make_family(7, "U6", "1,0,0,1,0"),
                    make_family(7, "U7", "0,1,0,1,3"),    make_family(7, "U8", "0,0,1,0,1"),
                    make_family(7, "U9", "0,0,1,1,0"),    make_family(7, "U10", "0,0,1,1,1"),
                    make_family(7, "U11", "0,0,1,0,0"),   make_family(7, "U12", "0,0,0,0,1"),
                    make_family(7, "U13", "0,0,0,1,0"),   make_family(7, "U14", "0,0,0,1,1"),
                    make_family(7, "F", "0,0,0,0,0")};
        case 8:
            return {make_family(8, "U1", "1,0,l1,l1,l2,l3"),
                    make_family(8, "U2", "1,0,l1,0,l2,l1"),
                    make_family(8, "U3", "1,0,1,0,l,0"),
                    make_family(8, "U4", "1,0,0,l1,l1,l2"),
                    make_family(8, "U5", "1,0,0,1,0,l"),
                    make_family(8, "U6", "1,0,0,0,l,l"),
                    make_family(8, "U7", "0,1,1,0,l1,l2"),
                    make_family(8, "U8", "0,1,1,-1,l1,l2"),
                    make_family(8, "U9", "0,1,0,0,l,1"),
                    make_family(8, "U10", "0,1,0,-1,l,1"),
                    make_family(8, "U11", "0,0,1,1,0,l"),
                    make_family(8, "U12", "0,0,1,0,l,0"),
                    make_family(8, "U13", "0,0,0,1,0,l"),
                    make_family(8, "U14", "0,0,0,1,1,l"),
                    make_family(8, "U15", "0,1,0,0,1,0"),
                    make_family(8, "U16", "0,1,0,0,0,0"),
                    make_family(8, "U17", "0,1,0,-1,1,0"),
                    make_family(8, "U18", "0,1,0,-1,0,0"),
                    make_family(8, "U19", "0,0,1,0,0,1"),
                    make_family(8, "U20", "0,0,0,0,0,1"),
                    make_family(8, "U21", "0,0,0,0,1,0"),
                    make_family(8, "U22", "0,0,0,0,1,1"),
                    make_family(8, "F", "0,0,0,0,0,0")};
    }
    throw UnsupportedDim("classification covers dimensions 5..8 only");
}

CountResult class_count(int dim) {
    CountResult r;
    r.dim = dim;
    if (dim < kMinDim) throw UnsupportedDim("dimension must be at least 5");
    const long n = dim;
    r.formula = n * n - 7 * n + 15;
    if (dim <= kMaxClassifyDim) {
        r.enumerated = static_cast<int>(enumerate_classes(dim).size());
        r.match = r.enumerated == r.formula;
    }
    return r;
}

namespace {

const FamilyInfo& family_of(const SubsetLabel& lab) {
    static std::map<std::pair<int, std::string>, FamilyInfo> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        for (int d = 5; d <= 8; ++d)
            for (FamilyInfo& f : enumerate_classes(d)) cache.emplace(std::make_pair(d, f.subset), f);
    }
    auto it = cache.find({lab.dim, lab.name});
    if (it == cache.end()) throw UncoveredInput("no family for subset " + lab.name);
    return it->second;
}

// sig = c0 + C * lambda, fitted on the representative family and verified at
// extra points; absent when the signature is not affine in the family
// parameters (then canonical_form raises NoRationalInverse).
struct AffineMap {
    std::vector<GR> c0;
    std::vector<std::vector<GR>> cols;  // cols[j][i]
};

std::optional<std::vector<GR>> try_signature(const SubsetLabel& lab, const FamilyInfo& fam,
                                             const std::vector<GR>& lambdas) {
    try {
        return signature_for(lab, fam.instantiate(lambdas)).values;
    } catch (const ZeroScale&) {
        return std::nullopt;
    } catch (const IndexOutOfRange&) {
        return std::nullopt;
    }
}

std::optional<AffineMap> fit_affine(const SubsetLabel& lab, const FamilyInfo& fam) {
    const int m = fam.arity;
    static const std::vector<std::vector<GR>> bases = {
        {GR(5, 3), GR(7, 4), GR(9, 5)},
        {GR(2), GR(3), GR(4)},
        {GR(7, 2), GR(5, 3), GR(11, 4)},
        {GR(4), GR(9, 2), GR(5)},
    };
    for (const auto& base_full : bases) {
        std::vector<GR> b(base_full.begin(), base_full.begin() + m);
        auto s0 = try_signature(lab, fam, b);
        if (!s0) continue;
        AffineMap map;
        map.cols.resize(m);
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
            std::vector<GR> bj = b;
            bj[j] += GR(1);
            auto sj = try_signature(lab, fam, bj);
            if (!sj) {
                ok = false;
                break;
            }
            map.cols[j].resize(s0->size());
            for (size_t i = 0; i < s0->size(); ++i) map.cols[j][i] = (*sj)[i] - (*s0)[i];
        }
        if (!ok) continue;
        map.c0 = *s0;
        for (int j = 0; j < m; ++j)
            for (size_t i = 0; i < map.c0.size(); ++i) map.c0[i] -= map.cols[j][i] * b[j];
        // Verify affineness at independent points; reject on any mismatch.
        static const std::vector<std::vector<GR>> offsets = {
            {GR(1), GR(1), GR(1)}, {GR(2), GR(5), GR(3)}, {GR(1, 2), GR(1, 3), GR(5, 2)}};
        for (const auto& off_full : offsets) {
            std::vector<GR> q = b;
            for (int j = 0; j < m; ++j) q[j] += off_full[j];
            auto sq = try_signature(lab, fam, q);
            if (!sq) {
                ok = false;
                break;
            }
            for (size_t i = 0; i < map.c0.size() && ok; ++i) {
                GR pred = map.c0[i];
                for (int j = 0; j < m; ++j) pred += map.cols[j][i] * q[j];
                if (pred != (*sq)[i]) ok = false;
            }
            if (!ok) break;
        }
        if (ok) return map;
        return std::nullopt;  // evaluable but not affine
    }
    return std::nullopt;
}

const std::optional<AffineMap>& inversion_map(const SubsetLabel& lab, const FamilyInfo& fam) {
    static std::map<std::pair<int, std::string>, std::optional<AffineMap>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(lab.dim, lab.name);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, fit_affine(lab, fam)).first;
    return it->second;
}

}  // namespace

CanonicalClass canonical_form(const ParamVector& p) {
    SubsetLabel lab = subset_of(p);
    if (!lab.covered())
        throw UncoveredInput("no printed subset predicate matches " + p.to_string());
    const FamilyInfo& fam = family_of(lab);
    CanonicalClass out;
    out.dim = p.dim;
    out.info = fam;
    if (fam.arity == 0) {
        out.family = fam.to_string();
        return out;
    }
    Signature sig = signature_for(lab, p);
    const auto& map = inversion_map(lab, fam);
    if (!map)
        throw NoRationalInverse("the signature of subset " + lab.name + " (dim " +
                                std::to_string(lab.dim) +
                                ") is not an invertible affine function of the family parameters");
    const int s = static_cast<int>(sig.values.size()), m = fam.arity;
    Matrix a(s, m);
    Vec rhs(s);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < m; ++j) a.at(i, j) = map->cols[j][i];
        rhs[i] = sig.values[i] - map->c0[i];
    }
    // Solve the (possibly overdetermined) exact system.
    Matrix aug(s, m + 1);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < m; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, m) = rhs[i];
    }
    int rk = rank_in_place(aug);
    std::vector<GR> lam(m);
    // After reduction, each pivot row reads lambda_j = aug(i, m); a pivot in
    // the last column means inconsistency; rank below m means non-invertible.
    int pivots = 0;
    for (int i = 0; i < rk; ++i) {
        int col = 0;
        while (col <= m && aug.at(i, col).is_zero()) ++col;
        if (col == m) throw Error("signature values are not realized by the family " + fam.to_string());
        if (col > m) continue;
        // Row may still involve later lambda columns only if rank < m.
        lam[col] = aug.at(i, m);
        ++pivots;
    }
    if (pivots < m)
        throw NoRationalInverse("the signature of subset " + lab.name +
                                " does not determine the family parameters");
    out.lambdas = lam;
    ParamVector canon = fam.instantiate(lam);
    if (signature_for(lab, canon).values != sig.values)
        throw Error("canonical representative fails to reproduce the signature");
    std::string disp = "L(";
    bool first = true;
    for (const FamilyInfo::Entry& e : fam.entries) {
        if (!first) disp += ",";
        first = false;
        disp += format_scalar(e.lambda > 0 ? lam[e.lambda - 1] : e.constant);
    }
    out.family = disp + ")";
    return out;
}

std::string to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::Isomorphic: return "Isomorphic";
        case IsoVerdict::NotIsomorphic: return "NotIsomorphic";
        case IsoVerdict::Unknown: return "Unknown";
    }
    return "?";
}

std::optional<AdaptedTriple> find_witness(const ParamVector& p, const ParamVector& q, int bound) {
    if (p.dim != q.dim) throw DimensionMismatch("cannot compare different dimensions");
    std::vector<GR> nonzero, all;
    for (int num = 1; num <= bound; ++num) {
        for (int den = 1; den <= bound; ++den) {
            if (std::gcd(num, den) != 1) continue;
            nonzero.push_back(GR(num, den));
            nonzero.push_back(GR(-num, den));
        }
    }
    all = nonzero;
    all.push_back(GR(0));
    for (const GR& A : nonzero) {
        for (const GR& D : nonzero) {
            for (const GR& B : all) {
                AdaptedTriple t{A, B, D};
                if (transform_params(p, t) == q) return t;
            }
        }
    }
    return std::nullopt;
}

namespace {

// Exact isomorphism decisions on the strata where the printed classification
// machinery is defective.  Each branch was established by normalizing the
// stratum through the transport oracle: the second component of a change
// shifts the last beta by y*gamma (and beta_6 by -3y*beta_4^2 when beta_3
// vanishes), which merges several printed subsets into single orbits over the
// algebraically closed ground field and leaves thin slices with invariants
// the printed signatures miss.  See the repeated-classes and
// signature-incomplete errata entries.
std::optional<IsoVerdict> stratum_verdict(const ParamVector& p, const ParamVector& q) {
    const int dim = p.dim;
    auto zero = [](const GR& v) { return v.is_zero(); };
    auto both = [&](int t) { return std::pair(p.beta_at(t), q.beta_at(t)); };
    const auto iso = IsoVerdict::Isomorphic, niso = IsoVerdict::NotIsomorphic;

    if (dim == 5) {
        // Slice beta_3 != 0, gamma = 2 beta_3^2 (the uncovered gap plus U2):
        // beta_4 transforms by scaling only, so its zeroness splits the slice
        // into exactly two orbits.
        auto on_slice = [&](const ParamVector& r) {
            return !zero(r.beta_at(3)) &&
                   zero(r.gamma - GR(2) * r.beta_at(3) * r.beta_at(3));
        };
        if (on_slice(p) && on_slice(q))
            return zero(p.beta_at(4)) == zero(q.beta_at(4)) ? iso : niso;
        return std::nullopt;
    }
    if (dim == 7) {
        auto [p3, q3] = both(3);
        if (zero(p3) != zero(q3)) return niso;  // beta_3 scales by xu
        if (!zero(p3)) return std::nullopt;     // printed signatures are sound here
        auto [p4, q4] = both(4);
        if (zero(p4) != zero(q4)) return niso;  // beta_4 scales when beta_3 = 0
        auto [p5, q5] = both(5);
        auto [p6, q6] = both(6);
        if (!zero(p4)) {
            if (zero(p5) != zero(q5)) return niso;
            const GR sp = p.gamma / (p4 * p4), sq = q.gamma / (q4 * q4);
            if (sp != sq) return niso;  // complete invariant off the slice
            if (sp != GR(3)) return iso;
            // Slice gamma = 3 beta_4^2: the y-shift of beta_6 cancels, leaving
            // an extra invariant the printed classification misses.
            if (!zero(p5))  // beta_4 beta_6 / beta_5^2
                return p4 * p6 / (p5 * p5) == q4 * q6 / (q5 * q5) ? iso : niso;
            return zero(p6) == zero(q6) ? iso : niso;
        }
        // beta_3 = beta_4 = 0: coordinates (beta_5, beta_6, gamma); beta_5 and
        // gamma transform by scaling, beta_6 by scaling plus a shift of
        // y*gamma.
        if (zero(p5) != zero(q5) || zero(p.gamma) != zero(q.gamma)) return niso;
        if (!zero(p.gamma)) return iso;  // beta_6 absorbed, scalings close up
        return zero(p6) == zero(q6) ? iso : niso;
    }
    if (dim == 8) {
        auto [p3, q3] = both(3);
        if (zero(p3) != zero(q3)) return niso;
        if (!zero(p3)) return std::nullopt;  // printed signatures are sound here
        auto [p4, q4] = both(4);
        if (zero(p4) != zero(q4)) return niso;
        auto [p5, q5] = both(5);
        auto [p6, q6] = both(6);
        auto [p7, q7] = both(7);
        if (!zero(p4)) {
            if (zero(p5) != zero(q5)) return niso;
            if (!zero(p5))  // U7/U8 merged stratum; this pair of values is a
                            // complete invariant (beta_6 normalized away by y)
                return signature_for({8, "U7"}, p).values == signature_for({8, "U7"}, q).values
                           ? iso
                           : niso;
            if (zero(p.gamma) != zero(q.gamma)) return niso;
            if (!zero(p.gamma))  // U9/U10 merged stratum, one complete invariant
                return signature_for({8, "U9"}, p).values == signature_for({8, "U9"}, q).values
                           ? iso
                           : niso;
            // gamma = 0, beta_5 = 0: beta_6 absorbed by y, beta_7 scales
            return zero(p7) == zero(q7) ? iso : niso;
        }
        // beta_3 = beta_4 = 0
        if (zero(p5) != zero(q5) || zero(p.gamma) != zero(q.gamma)) return niso;
        if (!zero(p5)) {
            if (zero(p6) != zero(q6)) return niso;
            if (!zero(p6)) {
                if (!zero(p.gamma))  // U11 with gamma != 0: printed invariant complete
                    return signature_for({8, "U11"}, p).values ==
                                   signature_for({8, "U11"}, q).values
                               ? iso
                               : niso;
                // U11 with gamma = 0: beta_5 beta_7 / beta_6^2 is the missing
                // complete invariant
                return p5 * p7 / (p6 * p6) == q5 * q7 / (q6 * q6) ? iso : niso;
            }
            if (!zero(p.gamma)) return iso;  // U19: beta_7 absorbed by y
            return zero(p7) == zero(q7) ? iso : niso;  // U12 and its b7 = 0 gap
        }
        // beta_5 = 0
        if (!zero(p.gamma)) {
            if (zero(p6) != zero(q6)) return niso;
            return iso;  // U13/U14 (b6 != 0) and U20/U22 (b6 = 0): single orbits
        }
        if (zero(p6) != zero(q6) || zero(p7) != zero(q7)) return niso;
        return iso;  // scaling-only coordinates close up over the closed field
    }
    return std::nullopt;
}

}  // namespace

IsoVerdict iso_decide(const ParamVector& p, const ParamVector& q, int witness_bound) {
    if (p.dim != q.dim) throw DimensionMismatch("cannot compare different dimensions");
    if (p.dim > kMaxClassifyDim) throw UnsupportedDim("iso decision covers dimensions 5..8 only");
    if (auto v = stratum_verdict(p, q)) return *v;
    SubsetLabel sp = subset_of(p), sq = subset_of(q);
    if (sp.covered() && sq.covered()) {
        if (sp.name != sq.name) return IsoVerdict::NotIsomorphic;
        return signature_for(sp, p).values == signature_for(sq, q).values
                   ? IsoVerdict::Isomorphic
                   : IsoVerdict::NotIsomorphic;
    }
    if (find_witness(p, q, witness_bound)) return IsoVerdict::Isomorphic;
    return IsoVerdict::Unknown;
}

}  // namespace sleib
