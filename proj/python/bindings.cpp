#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sleib/audit.hpp"
#include "sleib/io.hpp"

namespace py = pybind11;
using namespace sleib;

// Scalars cross the boundary as exact text ("5", "7/2", "1+1/2i") and points
// as their display form "L(b3,...,bn,g)"; nothing is ever rounded.
namespace {

AdaptedTriple triple_of(const std::tuple<std::string, std::string, std::string>& t) {
    return {parse_scalar(std::get<0>(t)), parse_scalar(std::get<1>(t)),
            parse_scalar(std::get<2>(t))};
}

std::tuple<std::string, std::string, std::string> triple_str(const AdaptedTriple& t) {
    return {format_scalar(t.A), format_scalar(t.B), format_scalar(t.D)};
}

std::vector<std::string> sig_values(const Signature& s) {
    std::vector<std::string> out;
    for (const auto& v : s.values) out.push_back(format_scalar(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_sleib, m) {
    m.doc() = "exact construction, transformation and classification of the "
              "second-class complex filiform Leibniz algebras";

    // Base first: translators run in reverse registration order, so the
    // specific exceptions must be registered after the catch-all.
    py::register_exception<Error>(m, "SleibError");
    py::register_exception<UncoveredInput>(m, "UncoveredInputError");
    py::register_exception<NoRationalInverse>(m, "NoRationalInverseError");

    m.def("verify", [](const std::string& point) {
        ParamVector p = load_point(point);
        AlgebraTable t = build_table(p);
        py::dict d;
        d["point"] = p.to_string();
        d["dim"] = p.dim;
        d["leibniz"] = leibniz_violations(t).empty();
        d["lower_central"] = lower_central_dims(t);
        d["filiform"] = lower_central_dims(t) == filiform_profile(p.dim);
        return d;
    }, py::arg("point"), "Leibniz identity and filiform profile of a point.");

    m.def("transform", [](const std::string& point,
                          const std::tuple<std::string, std::string, std::string>& t) {
        return transform_params(load_point(point), triple_of(t)).to_string();
    }, py::arg("point"), py::arg("triple"),
       "Parameters after the change of basis (A, B, D), via transport of structure.");

    m.def("closed_transform", [](const std::string& point,
                                 const std::tuple<std::string, std::string, std::string>& t) {
        return closed_form_transform(load_point(point), triple_of(t)).to_string();
    }, py::arg("point"), py::arg("triple"),
       "Same transformation through the closed-form operator.");

    m.def("classify", [](const std::string& point) {
        ParamVector p = load_point(point);
        SubsetLabel lab = subset_of(p);
        py::dict d;
        d["point"] = p.to_string();
        d["dim"] = p.dim;
        d["subset"] = lab.name;
        d["covered"] = lab.covered();
        if (lab.covered()) {
            Signature s = signature(p);
            d["signature"] = sig_values(s);
            d["errata"] = s.errata_variant;
        }
        return d;
    }, py::arg("point"));

    m.def("canonical", [](const std::string& point) {
        return canonical_form(load_point(point)).family;
    }, py::arg("point"),
       "Canonical representative; raises NoRationalInverseError on the "
       "documented no-invariant strata.");

    m.def("iso", [](const std::string& a, const std::string& b, int bound) {
        return to_string(iso_decide(load_point(a), load_point(b), bound));
    }, py::arg("a"), py::arg("b"), py::arg("bound") = 3);

    m.def("witness", [](const std::string& a, const std::string& b, int bound)
              -> std::optional<std::tuple<std::string, std::string, std::string>> {
        if (auto w = find_witness(load_point(a), load_point(b), bound))
            return triple_str(*w);
        return std::nullopt;
    }, py::arg("a"), py::arg("b"), py::arg("bound") = 3,
       "Explicit change of basis with bounded rational entries, if one exists.");

    m.def("enumerate_classes", [](int dim) {
        py::list out;
        for (const FamilyInfo& f : enumerate_classes(dim)) {
            py::dict d;
            d["subset"] = f.subset;
            d["family"] = f.to_string();
            d["arity"] = f.arity;
            out.append(d);
        }
        return out;
    }, py::arg("dim"));

    m.def("class_count", [](int dim) {
        CountResult c = class_count(dim);
        py::dict d;
        d["dim"] = dim;
        d["formula"] = c.formula;
        if (dim <= kMaxClassifyDim) {
            d["enumerated"] = c.enumerated;
            d["match"] = c.match;
        }
        return d;
    }, py::arg("dim"), "Class count: n^2 - 7n + 15, enumerated too for dims 5-8.");

    m.def("subset_names", &subset_names, py::arg("dim"));

    m.def("random_point", [](int dim, const std::string& subset, unsigned long long seed) {
        Sampler s(seed);
        ParamVector p = subset.empty() ? s.param_vector(dim) : s.in_subset(dim, subset);
        return p.to_string();
    }, py::arg("dim"), py::arg("subset") = "", py::arg("seed") = 1);
}
