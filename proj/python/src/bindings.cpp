// Python bindings for the duality core. Structured results cross the
// boundary as canonical JSON text; the package wrapper decodes them.

#include "bhk/errors.hpp"
#include "bhk/serialize.hpp"
#include "bhk/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bhk;

namespace {

QuotientLGModel model_from_text(const std::string& text) {
    return build_model(parse_model_file(text));
}

std::string parse_json(const std::string& text) {
    return dump_canonical(json_of(model_from_text(text)));
}

std::string dual_json(const std::string& text) {
    const QuotientLGModel model = model_from_text(text);
    const DualModel dual = dualize(model);
    return dump_canonical(Json{{"atau", json_of(dual.atau)},
                               {"b", json_of(dual.b)},
                               {"gt", json_of(dual.gt)},
                               {"ptau", json_of(dual.ptau)}});
}

std::string krawitz_json(const std::string& text) {
    const QuotientLGModel model = model_from_text(text);
    return dump_canonical(json_of(krawitz_dual(model.matrix(), model.group())));
}

std::string cy_json(const std::string& text) {
    const QuotientLGModel model = model_from_text(text);
    return dump_canonical(json_of(is_calabi_yau(model.matrix())));
}

std::string weights_json(const std::string& text, const std::string& side) {
    const QuotientLGModel model = model_from_text(text);
    const Factorization f = model.factorize();
    const CharacterSum monomials = side == "dual"
                                       ? CharacterSum::from_rows(f.a, TorusTag::QuotientFmTau)
                                       : quotient_superpotential(f);
    const WeightLattice w = weight_lattice(monomials);
    Json j = json_of(w);
    j["side"] = side;
    if (w.rank() == 1) j["generator"] = json_of(normalize_weight_generator(w, monomials));
    return dump_canonical(j);
}

std::string verify_json(const std::string& text_a, const std::string& text_b,
                        const std::string& theorem, std::uint64_t seed) {
    const QuotientLGModel a = model_from_text(text_a);
    const QuotientLGModel b = model_from_text(text_b);
    const VerifyOptions opts{seed, Int(1000000)};
    Certificate cert;
    if (theorem == "equal-sups")
        cert = verify_equal_sups(a, b, opts);
    else if (theorem == "cy-corollary")
        cert = verify_cy_corollary(a, b, opts);
    else if (theorem == "main")
        cert = verify_main(a, b, opts);
    else
        throw precondition_error("unknown theorem '" + theorem + "'");
    return dump_canonical(cert.to_json());
}

std::string krawitz_equivalence_json(const std::string& text, std::uint64_t seed) {
    const QuotientLGModel model = model_from_text(text);
    return dump_canonical(verify_krawitz_equivalence(model, VerifyOptions{seed, Int(1000000)}).to_json());
}

std::string selftest_json(std::uint64_t seed) {
    return dump_canonical(selftest(seed).to_json());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact duality for quotient Landau-Ginzburg models";

    // translators run most-recent-first: register the base before the
    // specific kinds so the latter win
    py::register_exception<error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<cap_error>(m, "CapError", PyExc_RuntimeError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<dimension_error>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<rank_error>(m, "RankError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);

    m.def("parse_model_json", &parse_json, py::arg("text"),
          "Canonical JSON for a model file (JSON or TOML text)");
    m.def("dual_model_json", &dual_json, py::arg("text"));
    m.def("krawitz_dual_json", &krawitz_json, py::arg("text"));
    m.def("cy_report_json", &cy_json, py::arg("text"));
    m.def("weights_json", &weights_json, py::arg("text"), py::arg("side") = "primal");
    m.def("verify_json", &verify_json, py::arg("text_a"), py::arg("text_b"),
          py::arg("theorem") = "main", py::arg("seed") = 0);
    m.def("krawitz_equivalence_json", &krawitz_equivalence_json, py::arg("text"),
          py::arg("seed") = 0);
    m.def("selftest_json", &selftest_json, py::arg("seed") = 0);
}
