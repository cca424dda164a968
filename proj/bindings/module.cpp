#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtorus/action.hpp"
#include "qtorus/parser.hpp"
#include "qtorus/verify.hpp"

namespace py = pybind11;
using namespace qtorus;

namespace {

Scalar scalar_from_text(const std::string& text, const std::string& slot) {
    if (text == "q") return Scalar::sym_q();
    if (text == "mu") return Scalar::sym_mu();
    if (text == "b") return Scalar::sym_b();
    mpq_class r(text);
    if (r.get_den() == 0) throw PreconditionError("zero denominator in '" + text + "'");
    r.canonicalize();
    (void)slot;
    return Scalar(r);
}

ParamEnv make_env(const std::string& q, const std::string& mu,
                  const std::optional<std::string>& b) {
    std::optional<Scalar> bs;
    if (b) bs = scalar_from_text(*b, "b");
    return ParamEnv(scalar_from_text(q, "q"), scalar_from_text(mu, "mu"), bs);
}

GridIndex to_index(std::pair<long long, long long> p) { return {p.first, p.second}; }

ModuleSpace make_space(const std::string& kind, const ParamEnv& env,
                       std::optional<std::pair<long long, long long>> m) {
    if (kind == "plain") return ModuleSpace::plain(env);
    if (!m) throw PreconditionError("space '" + kind + "' requires m");
    if (kind == "localized") return ModuleSpace::localized(env, to_index(*m));
    if (kind == "twisted") return ModuleSpace::twisted(env, to_index(*m));
    if (kind == "quotient") return ModuleSpace::quotient(env, to_index(*m));
    throw PreconditionError("unknown space '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact engine for localized free-field modules of gl2 over a quantum torus";

    // base first: pybind11 dispatches to the most recently registered handler
    py::register_exception<Error>(m, "EngineError");
    py::register_exception<ParseError>(m, "ExprParseError");

    py::class_<Scalar>(m, "Scalar")
        .def("__str__", &Scalar::str)
        .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.str() + ")"; })
        .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
        .def("is_zero", &Scalar::is_zero)
        .def("is_integer", &Scalar::is_integer);

    py::class_<ParamEnv>(m, "ParamEnv")
        .def(py::init(&make_env), py::arg("q"), py::arg("mu"),
             py::arg("b") = std::nullopt,
             "Parameters as rational strings ('2', '-1/3') or symbol names.")
        .def_property_readonly("q", &ParamEnv::q)
        .def_property_readonly("mu", &ParamEnv::mu)
        .def("q_power", &ParamEnv::q_power);

    py::class_<ModuleSpace>(m, "ModuleSpace")
        .def(py::init(&make_space), py::arg("kind"), py::arg("env"),
             py::arg("m") = std::nullopt,
             "kind: plain|localized|twisted|quotient; m: (m1, m2).")
        .def_property_readonly("kind",
                               [](const ModuleSpace& s) { return to_string(s.kind()); });

    py::class_<MVector>(m, "MVector")
        .def("__str__", &MVector::str)
        .def("__repr__", [](const MVector& v) { return "MVector(" + v.str() + ")"; })
        .def("__eq__", [](const MVector& a, const MVector& b) { return a == b; })
        .def("__add__", [](const MVector& a, const MVector& b) { return a + b; })
        .def("__sub__", [](const MVector& a, const MVector& b) { return a - b; })
        .def("__neg__", [](const MVector& a) { return -a; })
        .def("is_zero", &MVector::is_zero)
        .def("scaled", &MVector::scaled);

    py::class_<AlgElement>(m, "AlgElement")
        .def("__str__", &AlgElement::str)
        .def("__repr__", [](const AlgElement& u) { return "AlgElement(" + u.str() + ")"; })
        .def("__eq__", [](const AlgElement& a, const AlgElement& b) { return a == b; })
        .def("__mul__", [](const AlgElement& a, const AlgElement& b) { return a * b; })
        .def("__add__", [](const AlgElement& a, const AlgElement& b) { return a + b; });

    py::class_<WeightValue>(m, "WeightValue")
        .def("__str__", &WeightValue::str)
        .def_property_readonly("e11", [](const WeightValue& w) { return w.e11.str(); })
        .def_property_readonly("e22", [](const WeightValue& w) { return w.e22.str(); })
        .def_property_readonly("d1", [](const WeightValue& w) { return w.d1.str(); })
        .def_property_readonly("d2", [](const WeightValue& w) { return w.d2.str(); });

    py::class_<ProbeReport>(m, "ProbeReport")
        .def_property_readonly("suite", [](const ProbeReport& r) { return r.suite; })
        .def_property_readonly(
            "verdict",
            [](const ProbeReport& r) { return ProbeReport::verdict_name(r.verdict); })
        .def_readonly("trials", &ProbeReport::trials)
        .def_readonly("seed", &ProbeReport::seed)
        .def("ok", &ProbeReport::ok)
        .def("json", [](const ProbeReport& r) { return r.to_json().dump(2); })
        .def("text", &ProbeReport::text);

    m.def("parse_vector", &parse_vector, py::arg("text"), py::arg("env"));
    m.def("parse_word", &parse_word, py::arg("text"), py::arg("env"));
    m.def("parse_scalar", &parse_scalar, py::arg("text"), py::arg("env"));

    m.def(
        "act",
        [](const ModuleSpace& space, const AlgElement& u, const MVector& v) {
            return act_element(space, u, v);
        },
        py::arg("space"), py::arg("op"), py::arg("vec"));
    m.def(
        "act",
        [](const ModuleSpace& space, const std::string& op, const std::string& vec) {
            return act_element(space, parse_word(op, space.env()),
                               parse_vector(vec, space.env()));
        },
        py::arg("space"), py::arg("op"), py::arg("vec"));
    m.def("weights", &weight_of, py::arg("space"), py::arg("vec"));

    m.def(
        "singular_vector",
        [](const ParamEnv& env, std::pair<long long, long long> m,
           std::pair<long long, long long> n, long long d) {
            return singular_vector(env, to_index(m), to_index(n), d);
        },
        py::arg("env"), py::arg("m"), py::arg("n"), py::arg("d"));

    m.def(
        "cyclicity_run",
        [](const MVector& v, const ParamEnv& env, std::pair<long long, long long> m,
           long long max_steps) { return cyclicity_run(v, env, to_index(m), max_steps); },
        py::arg("vec"), py::arg("env"), py::arg("m"), py::arg("max_steps") = 64);

    m.def(
        "nilpotency_probe",
        [](const ModuleSpace& space, const std::string& op, const MVector& v,
           long long max_iter) {
            AlgElement u = parse_word(op, space.env());
            if (u.terms().size() != 1 || u.terms().begin()->first.size() != 1 ||
                u.terms().begin()->first[0].inverse)
                throw PreconditionError("op must be a single generator");
            return nilpotency_probe(space, u.terms().begin()->first[0].gen, v, max_iter);
        },
        py::arg("space"), py::arg("op"), py::arg("vec"), py::arg("max_iter") = 16);

    m.def(
        "span_probe",
        [](const MVector& seed, const ModuleSpace& space, const MVector& target,
           int gen_window, long long degree_cap, long long max_dim) {
            SpanProbeOptions opt;
            opt.gen_window = gen_window;
            opt.degree_cap = degree_cap;
            opt.max_dim = static_cast<std::size_t>(max_dim);
            return span_probe(seed, space, target, opt);
        },
        py::arg("seed"), py::arg("space"), py::arg("target"), py::arg("gen_window") = 1,
        py::arg("degree_cap") = 4, py::arg("max_dim") = 200);

    m.def(
        "run_suite",
        [](const std::string& suite, long long trials, std::uint64_t seed) {
            auto s = suite_from_name(suite);
            if (!s) throw PreconditionError("unknown suite '" + suite + "'");
            return run_suite(*s, trials, seed);
        },
        py::arg("suite"), py::arg("trials") = 50, py::arg("seed") = 0);
}
