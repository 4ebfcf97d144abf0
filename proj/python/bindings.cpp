#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdesc/error.hpp"
#include "cdesc/fixture.hpp"
#include "cdesc/gysin.hpp"
#include "cdesc/motive.hpp"
#include "cdesc/report.hpp"
#include "cdesc/scissor.hpp"
#include "cdesc/snc.hpp"

namespace py = pybind11;
using namespace cdesc;

namespace {

py::object to_python(const std::string& json_text) { return py::module_::import("json").attr("loads")(json_text); }

std::vector<std::string> keys(const auto& m) {
    std::vector<std::string> out;
    for (const auto& [k, v] : m) out.push_back(k);
    return out;
}

}  // namespace

PYBIND11_MODULE(cdesc, m) {
    m.doc() = "Cubical descent, Gysin complexes and motivic Euler characteristics over Q";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<FixtureError>(m, "FixtureError", base);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<UsageError>(m, "UsageError", base);
    py::register_exception<UnknownNameError>(m, "UnknownNameError", base);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", base);
    py::register_exception<InvalidMapError>(m, "InvalidMapError", base);

    py::class_<Fixture>(m, "Fixture")
        .def_static("load", &load_fixture, py::arg("path"))
        .def_static("parse", [](const std::string& text) { return parse_fixture(text); }, py::arg("text"))
        .def("dump", &dump_fixture)
        .def_property_readonly("atoms", [](const Fixture& f) { return f.atoms.names(); })
        .def_property_readonly("pairs", [](const Fixture& f) { return keys(f.pairs); })
        .def_property_readonly("squares", [](const Fixture& f) { return keys(f.squares); })
        .def_property_readonly("class_squares", [](const Fixture& f) { return keys(f.class_squares); })
        .def_property_readonly("blowups", [](const Fixture& f) { return keys(f.blowups); })
        .def_property_readonly("varieties", [](const Fixture& f) { return keys(f.varieties.entries()); });

    m.def(
        "run",
        [](const std::string& command, std::optional<std::string> target, const Fixture& fixture,
           std::optional<std::string> pair, std::optional<std::string> square, std::optional<std::string> atom,
           std::uint64_t seed, std::optional<std::size_t> cases) {
            RunOptions opts{pair, square, atom, seed, cases};
            Report r;
            {
                py::gil_scoped_release release;
                r = run_command(command, target, fixture, opts);
            }
            return to_python(r.structured());
        },
        py::arg("command"), py::arg("target") = py::none(), py::arg("fixture"), py::kw_only(),
        py::arg("pair") = py::none(), py::arg("square") = py::none(), py::arg("atom") = py::none(),
        py::arg("seed") = 7, py::arg("cases") = py::none());

    m.def("normalize", [](const Fixture& f, const std::string& c) { return f.relations.normalize(parse_class(c)).to_string(); });
    m.def("realize", [](const Fixture& f, const std::string& c) { return realize_E(f.atoms, parse_class(c)).to_string(); });
    m.def("dual", [](const Fixture& f, const std::string& c) { return dual(f.atoms, parse_class(c)).to_string(); });
    m.def("twist", [](const std::string& c, int i) { return twist(parse_class(c), i).to_string(); });
    m.def("chi_open", [](const Fixture& f, const std::string& pair) {
        return f.relations.normalize(chi_open(f.pair(pair).pair)).to_string();
    });
    m.def("chi_c_open", [](const Fixture& f, const std::string& pair) {
        return f.relations.normalize(chi_c_open(f.pair(pair).pair)).to_string();
    });
    m.def("gamma_squared_defects",
          [](const Fixture& f, const std::string& pair) { return GysinComplex(f.pair(pair).pair).gamma_squared_defects(); });
    m.def("chi_c_scissor", [](const Fixture& f, const std::string& variety) {
        return chi_c_scissor(f.atoms, f.relations, f.varieties, variety, ScissorMode::normalized).to_string();
    });
    m.def("serre_cone", [](const Fixture& f, const std::string& atom) {
        const auto r = serre_report(f.atoms, f.relations, atom);
        py::dict d;
        d["chi_c"] = r.chi_c.to_string();
        d["chi"] = r.chi.to_string();
        d["oracle"] = r.oracle.to_string();
        d["matches_oracle"] = r.matches_oracle;
        d["classes_differ"] = r.classes_differ;
        return d;
    });
}
