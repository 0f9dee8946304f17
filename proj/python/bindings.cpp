#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "intamp/examples_corpus.hpp"
#include "intamp/json_io.hpp"

namespace py = pybind11;
using intamp::jsonio::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw intamp::InputError(std::string("malformed JSON: ") + e.what());
    }
}

intamp::RatPoly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<intamp::Rat> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(intamp::parse_rat(s));
    return intamp::RatPoly(std::move(c));
}

std::string classify_json(const std::string& in) {
    return intamp::jsonio::classification_to_json(
               intamp::classify(intamp::jsonio::endo_action_from_json(parse(in))))
        .dump();
}

std::string build_ns_json(const std::string& in) {
    return intamp::jsonio::endo_action_to_json(
               intamp::ns_pullback(intamp::jsonio::cmendo_from_json(parse(in))))
        .dump();
}

std::string compose_json(const std::string& in) {
    json j = parse(in);
    if (!j.contains("f") || !j.contains("g"))
        throw intamp::InputError("compose expects {\"f\": .., \"g\": ..}");
    return intamp::jsonio::composition_to_json(
               intamp::compose_min_power(intamp::jsonio::endo_action_from_json(j.at("f")),
                                         intamp::jsonio::endo_action_from_json(j.at("g"))))
        .dump();
}

std::string cone_contains_json(const std::string& cone, const std::vector<std::string>& point,
                               bool strict) {
    intamp::PolyCone C = intamp::jsonio::cone_from_json(parse(cone));
    std::vector<intamp::Rat> v;
    for (const auto& s : point) v.push_back(intamp::parse_rat(s));
    return intamp::jsonio::membership_to_json(intamp::cone_contains(C, v, strict)).dump();
}

std::string verify_pf_lemma_json(const std::string& phi, const std::string& cone) {
    auto a = intamp::jsonio::endo_action_from_json(parse(phi));
    auto C = intamp::jsonio::cone_from_json(parse(cone));
    return intamp::jsonio::witness_to_json(intamp::verify_pf_lemma(a.mat, C)).dump();
}

std::string orbit_witness_json(const std::string& phi, const std::vector<std::string>& v,
                               long m_max) {
    auto a = intamp::jsonio::endo_action_from_json(parse(phi));
    std::vector<intamp::Rat> vv;
    for (const auto& s : v) vv.push_back(intamp::parse_rat(s));
    return intamp::jsonio::witness_to_json(intamp::orbit_cone_witness(a.mat, vv, m_max)).dump();
}

py::tuple circle_profile_py(const std::vector<std::string>& coeffs, const std::string& radius_sq) {
    auto p = intamp::circle_profile(poly_from_strings(coeffs), intamp::parse_rat(radius_sq));
    return py::make_tuple(p.inside, p.on, p.outside);
}

py::tuple same_modulus_py(const std::vector<std::string>& coeffs) {
    auto v = intamp::same_modulus(poly_from_strings(coeffs));
    const char* kind = "Unknown";
    switch (v.kind) {
        case intamp::ModulusVerdict::Kind::AllEqual: kind = "AllEqual"; break;
        case intamp::ModulusVerdict::Kind::AllEqualIrrational: kind = "AllEqualIrrational"; break;
        case intamp::ModulusVerdict::Kind::NotAllEqual: kind = "NotAllEqual"; break;
        default: break;
    }
    return py::make_tuple(kind, intamp::rat_str(v.q_sq));
}

std::vector<py::tuple> root_balls_py(const std::vector<std::string>& coeffs, unsigned prec) {
    std::vector<py::tuple> out;
    for (const auto& rb : intamp::root_balls(poly_from_strings(coeffs), prec))
        out.push_back(py::make_tuple(rb.ball.re.to_double(), rb.ball.im.to_double(),
                                     rb.ball.rad.to_double(), rb.multiplicity));
    return out;
}

std::string run_examples_json(const std::string& case_id) {
    json out = json::array();
    for (const std::string& id : intamp::example_ids()) {
        if (!case_id.empty() && id != case_id) continue;
        intamp::ExampleReport rep = intamp::run_example(id);
        json c;
        c["id"] = rep.id;
        json as = json::array();
        for (const auto& a : rep.assertions) as.push_back({{"assertion", a.name}, {"pass", a.pass}});
        c["assertions"] = std::move(as);
        c["all_pass"] = rep.all_pass();
        out.push_back(std::move(c));
    }
    if (out.empty()) throw intamp::InputError("unknown example id: " + case_id);
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact spectral criteria for endomorphism pullback actions";

    py::register_exception<intamp::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<intamp::MathError>(m, "MathError", PyExc_ArithmeticError);

    m.def("classify_json", &classify_json, py::arg("endo_json"),
          "Classify a pullback action (EndoAction or CMEndo JSON) -> report JSON");
    m.def("build_ns_json", &build_ns_json, py::arg("cmendo_json"),
          "Build the N^1 pullback action of a CM endomorphism -> EndoAction JSON");
    m.def("compose_json", &compose_json, py::arg("pair_json"),
          "Composition-power certificate for {\"f\": .., \"g\": ..} -> report JSON");
    m.def("cone_contains_json", &cone_contains_json, py::arg("cone_json"), py::arg("point"),
          py::arg("strict") = false, "Exact cone membership with certificate -> JSON");
    m.def("verify_pf_lemma_json", &verify_pf_lemma_json, py::arg("phi_json"), py::arg("cone_json"),
          "Invariant-cone eigenvalue lemma verifier -> witness JSON");
    m.def("orbit_witness_json", &orbit_witness_json, py::arg("phi_json"), py::arg("v"),
          py::arg("m_max") = 64L, "Orbit-cone relative-interior witness search -> JSON");
    m.def("circle_profile", &circle_profile_py, py::arg("coeffs"), py::arg("radius_sq") = "1",
          "Exact (inside, on, outside) root counts; coeffs low degree first, as strings");
    m.def("same_modulus", &same_modulus_py, py::arg("coeffs"),
          "(kind, q_sq) for a monic polynomial; kind in {AllEqual, AllEqualIrrational, NotAllEqual}");
    m.def("root_balls", &root_balls_py, py::arg("coeffs"), py::arg("prec") = 64u,
          "Validated root enclosures as (re, im, rad, multiplicity) floats");
    m.def("run_examples_json", &run_examples_json, py::arg("case_id") = std::string(),
          "Run the bundled example corpus -> JSON");
}
