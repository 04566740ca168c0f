#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gdgap/config_io.hpp"
#include "gdgap/examples.hpp"
#include "gdgap/fuzz.hpp"

namespace py = pybind11;
using namespace gdgap;

namespace {

Scalar to_scalar(py::handle h) {
    if (py::isinstance<Scalar>(h)) return h.cast<Scalar>();
    if (py::isinstance<py::int_>(h)) return Scalar(Rational::parse(py::str(h).cast<std::string>()));
    if (py::isinstance<py::str>(h)) return Scalar::parse(h.cast<std::string>());
    throw py::type_error("expected Scalar, int or exact literal string");
}

Point2 to_point2(py::handle h) {
    auto seq = py::cast<py::sequence>(h);
    if (seq.size() != 2) throw py::value_error("point needs two coordinates");
    return {to_scalar(seq[0]), to_scalar(seq[1])};
}

py::tuple from_point2(const Point2& p) { return py::make_tuple(p.x1, p.x2); }
py::tuple from_point3(const Point3& p) { return py::make_tuple(p.x1, p.x2, p.x3); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact tetrahedron insphere/circumsphere gap certificates";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<degeneracy_error>(m, "DegeneracyError", PyExc_ArithmeticError);
    py::register_exception<check_error>(m, "CheckError", PyExc_RuntimeError);

    py::class_<Scalar>(m, "Scalar")
        .def(py::init([](const std::string& text) { return Scalar::parse(text); }))
        .def(py::init([](long v) { return Scalar(v); }))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("sign", &Scalar::sign)
        .def("is_zero", &Scalar::is_zero)
        .def("is_rational", &Scalar::is_rational)
        .def_property_readonly("radicand", &Scalar::radicand)
        .def("sqrt",
             [](const Scalar& s, long long ambient_k) -> py::object {
                 auto root = exact_sqrt(s, ambient_k);
                 if (!root) return py::none();
                 return py::cast(*root);
             },
             py::arg("ambient_k") = 0,
             "exact square root inside Q(sqrt(ambient_k)), or None")
        .def("as_fraction",
             [](const Scalar& s) {
                 return py::module_::import("fractions").attr("Fraction")(s.rat().str());
             })
        .def("__float__", &Scalar::to_double)
        .def("__str__", &Scalar::str)
        .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; });
    py::implicitly_convertible<py::str, Scalar>();
    py::implicitly_convertible<py::int_, Scalar>();

    py::class_<BaseConfig>(m, "BaseConfig")
        .def_property_readonly("x", [](const BaseConfig& c) { return from_point2(c.x); })
        .def_property_readonly("y", [](const BaseConfig& c) { return from_point2(c.y); })
        .def_property_readonly("z", [](const BaseConfig& c) { return from_point2(c.z); })
        .def_property_readonly("c", [](const BaseConfig& c) { return from_point2(c.c); })
        .def_readonly("r", &BaseConfig::r)
        .def_readonly("field_k", &BaseConfig::field_k)
        .def("__repr__", [](const BaseConfig& c) { return config_text(c); });

    m.def("make_config",
          [](py::handle x, py::handle y, py::handle z, py::handle c, py::handle r) {
              return BaseConfig::make(to_point2(x), to_point2(y), to_point2(z), to_point2(c),
                                      to_scalar(r));
          },
          py::arg("x"), py::arg("y"), py::arg("z"), py::arg("c"), py::arg("r"));
    m.def("parse_config", &parse_config_text);
    m.def("config_text", &config_text);
    m.def("with_radius", [](const BaseConfig& cfg, py::handle r) {
        return with_radius(cfg, to_scalar(r));
    });
    m.def("example_config", &example_config);

    m.def("area_set", [](const BaseConfig& cfg) {
        AreaSet a = area_set(cfg);
        return py::make_tuple(a.a0, a.ax, a.ay, a.az);
    });
    m.def("critical_pair", [](const BaseConfig& cfg) {
        CriticalPair ab = critical_pair(cfg);
        return py::make_tuple(ab.A, ab.B);
    });
    m.def("critical_inradius_sq", &critical_inradius_sq);
    m.def("circumcenter", [](py::handle x, py::handle y, py::handle z) {
        return from_point2(circumcenter2(to_point2(x), to_point2(y), to_point2(z)));
    });
    m.def("incenter",
          [](py::handle x, py::handle y, py::handle z, long long ambient_k) {
              return from_point2(incenter2(to_point2(x), to_point2(y), to_point2(z), ambient_k));
          },
          py::arg("x"), py::arg("y"), py::arg("z"), py::arg("ambient_k") = 0);
    m.def("barycentric_weights", [](const BaseConfig& cfg) {
        BarycentricWeights w = barycentric_weights(cfg);
        return py::make_tuple(w.tx, w.ty, w.tz);
    });

    m.def("tangent_points", [](const BaseConfig& cfg) {
        TangentPoints tp = tangent_points(cfg);
        return py::make_tuple(from_point3(tp.X), from_point3(tp.Y), from_point3(tp.Z));
    });
    m.def("apex", [](const BaseConfig& cfg) { return from_point3(apex(cfg)); });
    m.def("apex_height", &apex_height);
    m.def("criticality_coplanarity", &criticality_coplanarity);

    py::class_<Metrics>(m, "Metrics")
        .def_property_readonly("o", [](const Metrics& mm) { return from_point3(mm.o); })
        .def_readonly("R2", &Metrics::R2)
        .def_readonly("d2", &Metrics::d2)
        .def_readonly("r", &Metrics::r);
    m.def("metrics", &pipeline_metrics);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("squared_gap", &Verdict::squared_gap)
        .def_readonly("linear_side_sign", &Verdict::linear_side_sign)
        .def_readonly("satisfied", &Verdict::satisfied)
        .def_readonly("equality", &Verdict::equality);
    m.def("verdict", [](const BaseConfig& cfg) { return gd_verdict(pipeline_metrics(cfg)); });

    py::class_<GapCertificate>(m, "GapCertificate")
        .def_readonly("u1", &GapCertificate::u1)
        .def_readonly("u2", &GapCertificate::u2)
        .def_readonly("v1", &GapCertificate::v1)
        .def_readonly("v2", &GapCertificate::v2)
        .def_readonly("a0", &GapCertificate::a0)
        .def_readonly("A", &GapCertificate::A)
        .def_readonly("B", &GapCertificate::B)
        .def_readonly("alpha", &GapCertificate::alpha)
        .def_readonly("beta", &GapCertificate::beta)
        .def_readonly("gamma", &GapCertificate::gamma)
        .def_readonly("dis", &GapCertificate::dis)
        .def_readonly("lhs", &GapCertificate::lhs)
        .def_readonly("rhs", &GapCertificate::rhs);
    m.def("certificate", &certificate);
    m.def("gap", &pipeline_gap);

    py::enum_<EquilateralRegime>(m, "EquilateralRegime")
        .value("below_regular", EquilateralRegime::below_regular)
        .value("regular", EquilateralRegime::regular)
        .value("above_regular", EquilateralRegime::above_regular);
    py::class_<EquilateralReport>(m, "EquilateralReport")
        .def_readonly("w3", &EquilateralReport::w3)
        .def_readonly("R", &EquilateralReport::R)
        .def_readonly("d2", &EquilateralReport::d2)
        .def_readonly("squared_gap", &EquilateralReport::squared_gap)
        .def_readonly("linear_side_sign", &EquilateralReport::linear_side_sign)
        .def_readonly("regime", &EquilateralReport::regime);
    m.def("equilateral_gap", [](py::handle l2, py::handle r) {
        return equilateral_gap(to_scalar(l2), to_scalar(r));
    });

    m.def("planar_critical_sq",
          [](py::handle p) { return Scalar(planar_critical_sq(to_scalar(p).rat())); });
    m.def("planar_apex_height", [](py::handle p, py::handle r) {
        return Scalar(planar_apex_height(to_scalar(p).rat(), to_scalar(r).rat()));
    });

    py::class_<PechReport>(m, "PechReport")
        .def_readonly("identity_value", &PechReport::identity_value)
        .def_readonly("heronian", &PechReport::heronian)
        .def_readonly("K", &PechReport::K)
        .def_readonly("r", &PechReport::r)
        .def_readonly("R", &PechReport::R)
        .def_readonly("d2", &PechReport::d2)
        .def_readonly("euler_margin_sign", &PechReport::euler_margin_sign);
    m.def("pech_identity", [](py::handle a, py::handle b, py::handle c) {
        auto [P, S] = pech_identity(to_scalar(a), to_scalar(b), to_scalar(c));
        return py::make_tuple(P, S);
    });
    m.def("pech_euler",
          [](py::handle a, py::handle b, py::handle c, long long ambient_k) {
              return pech_euler(to_scalar(a), to_scalar(b), to_scalar(c), ambient_k);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("ambient_k") = 0);

    m.def("run_example", [](int n) {
        py::list out;
        for (const auto& c : run_example(n))
            out.append(py::make_tuple(c.name, c.expected, c.actual, c.ok));
        return out;
    });
    m.def("run_fuzz",
          [](int trials, std::uint64_t seed, long coord_bound, long den_bound, unsigned threads) {
              FuzzParams params{seed, trials, coord_bound, den_bound, threads};
              FuzzSummary s = run_fuzz(params);
              py::list failures;
              for (const auto& f : s.failures)
                  failures.append(py::make_tuple(f.trial, f.config, f.message));
              return py::make_tuple(s.ok, s.trials, failures);
          },
          py::arg("trials") = 100, py::arg("seed") = 0, py::arg("coord_bound") = 100,
          py::arg("den_bound") = 10, py::arg("threads") = 0);
    m.def("check_invariants", [](const BaseConfig& cfg) -> py::object {
        auto msg = check_invariants(cfg);
        if (!msg) return py::none();
        return py::str(*msg);
    });
}
