#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hagge4/svg_render.hpp"
#include "hagge4/verify.hpp"

namespace py = pybind11;

namespace {

hagge::Figure figure_from_name(const std::string& name) {
    if (name == "config")
        return hagge::Figure::Config;
    if (name == "hagge")
        return hagge::Figure::Hagge;
    throw hagge::InvalidParameter("figure must be \"config\" or \"hagge\"");
}

py::int_ to_py_int(const hagge::BigInt& v) { return py::int_(py::str(v.str())); }

} // namespace

PYBIND11_MODULE(hagge4, m) {
    m.doc() = "Exact-arithmetic verifier for the four-Hagge-circle configuration";

    py::register_exception<hagge::Error>(m, "Error");

    py::class_<hagge::Rational>(m, "Rational")
        .def(py::init([](const std::string& text) { return hagge::Rational::parse(text); }))
        .def(py::init([](std::int64_t n) { return hagge::Rational(n); }))
        .def(py::init([](std::int64_t n, std::int64_t d) {
                 return hagge::Rational(hagge::BigInt(n), hagge::BigInt(d));
             }),
             py::arg("num"), py::arg("den"))
        .def_property_readonly("num",
                               [](const hagge::Rational& r) { return to_py_int(r.num()); })
        .def_property_readonly("den",
                               [](const hagge::Rational& r) { return to_py_int(r.den()); })
        .def("__str__", &hagge::Rational::str)
        .def("__repr__",
             [](const hagge::Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__float__", &hagge::Rational::to_double)
        .def("__eq__", [](const hagge::Rational& a, const hagge::Rational& b) { return a == b; },
             py::is_operator())
        .def("__lt__", [](const hagge::Rational& a, const hagge::Rational& b) { return a < b; },
             py::is_operator())
        .def("__neg__", [](const hagge::Rational& a) { return -a; })
        .def("__add__", [](const hagge::Rational& a, const hagge::Rational& b) { return a + b; })
        .def("__sub__", [](const hagge::Rational& a, const hagge::Rational& b) { return a - b; })
        .def("__mul__", [](const hagge::Rational& a, const hagge::Rational& b) { return a * b; })
        .def("__truediv__",
             [](const hagge::Rational& a, const hagge::Rational& b) { return a / b; });
    py::implicitly_convertible<py::str, hagge::Rational>();
    py::implicitly_convertible<py::int_, hagge::Rational>();

    py::class_<hagge::Point>(m, "Point")
        .def(py::init([](const hagge::Rational& x, const hagge::Rational& y) {
                 return hagge::Point{x, y};
             }),
             py::arg("x"), py::arg("y"))
        .def_readonly("x", &hagge::Point::x)
        .def_readonly("y", &hagge::Point::y)
        .def("__eq__", [](const hagge::Point& a, const hagge::Point& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const hagge::Point& p) {
            return "Point(" + p.x.str() + ", " + p.y.str() + ")";
        });

    py::class_<hagge::Circle>(m, "Circle")
        .def_property_readonly("center", &hagge::Circle::center)
        .def_property_readonly("r_sq", &hagge::Circle::r_sq)
        .def("contains", &hagge::Circle::contains)
        .def("__repr__", [](const hagge::Circle& c) {
            return "Circle(center=Point(" + c.center().x.str() + ", " + c.center().y.str() +
                   "), r_sq=" + c.r_sq().str() + ")";
        });

    py::class_<hagge::QuadConfig>(m, "QuadConfig")
        .def_property_readonly("a",
                               [](const hagge::QuadConfig& c) { return c.a().t(); })
        .def_property_readonly("b",
                               [](const hagge::QuadConfig& c) { return c.b().t(); })
        .def_property_readonly("c",
                               [](const hagge::QuadConfig& c) { return c.c().t(); })
        .def_property_readonly("d",
                               [](const hagge::QuadConfig& c) { return c.d().t(); })
        .def_property_readonly("p",
                               [](const hagge::QuadConfig& c) { return c.p().t(); })
        .def("vertex", &hagge::QuadConfig::vertex, py::arg("k"))
        .def("orthocentre", &hagge::QuadConfig::orthocentre, py::arg("k"))
        .def("p_point", &hagge::QuadConfig::p_point)
        .def("__repr__", [](const hagge::QuadConfig& c) {
            return "QuadConfig(a=" + c.a().t().str() + ", b=" + c.b().t().str() +
                   ", c=" + c.c().t().str() + ", d=" + c.d().t().str() +
                   ", p=" + c.p().t().str() + ")";
        });

    m.def("make_config", &hagge::QuadConfig::make, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("p"),
          "Build a configuration; d is derived as 1/(abc). Raises Error on "
          "degenerate parameters.");

    m.def("circumcircle", &hagge::circumcircle, py::arg("config"));

    m.def(
        "verify_json",
        [](const hagge::QuadConfig& cfg) { return hagge::to_json(hagge::run_all(cfg)); },
        py::arg("config"), "Run the full check catalogue and return the JSON report.");

    m.def(
        "verify_text",
        [](const hagge::QuadConfig& cfg) { return hagge::to_text(hagge::run_all(cfg)); },
        py::arg("config"), "Run the full check catalogue and return the text report.");

    m.def("catalogue_ids", []() { return hagge::catalogue_ids(); },
          "Check ids in catalogue order.");

    m.def("sample_configs", &hagge::sample_configs, py::arg("seed"), py::arg("count"),
          py::arg("max_mag") = 9,
          "Deterministic seeded random configurations (rejection sampled).");

    m.def(
        "render_svg",
        [](const hagge::QuadConfig& cfg, const std::string& figure, int size_px) {
            hagge::RenderSpec spec;
            spec.figure = figure_from_name(figure);
            spec.size_px = size_px;
            return hagge::render_svg(cfg, spec);
        },
        py::arg("config"), py::arg("figure"), py::arg("size_px") = 800,
        "Render figure \"config\" or \"hagge\" as an SVG document string.");
}
