#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dw/cli.hpp"

namespace py = pybind11;
using namespace dw;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Twisted quantum double anyons, boundaries and walls";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<BoundaryInvalid>(m, "BoundaryInvalid", PyExc_ValueError);
    py::register_exception<NonIntegerMultiplicity>(m, "NonIntegerMultiplicity", PyExc_ArithmeticError);

    py::class_<Group>(m, "Group")
        .def_readonly("order", &Group::n)
        .def_readonly("name", &Group::name)
        .def("__call__", &Group::operator())
        .def("inverse", [](const Group& G, int g) { return G.inv.at(g); })
        .def("element_name", &Group::element_name)
        .def("parse_element", &Group::parse_element)
        .def("is_abelian", &Group::abelian)
        .def("__repr__", [](const Group& G) { return "<Group " + G.name + " of order " + std::to_string(G.n) + ">"; });
    m.def("cyclic", &make_cyclic, py::arg("n"));
    m.def("s3", &make_s3);
    m.def("product", &make_product, py::arg("factors"));
    m.def("closure", &closure, py::arg("group"), py::arg("generators"));
    m.def("group_from_spec", &parse_group_spec, py::arg("json_text"));

    m.def(
        "run",
        [](const std::string& config, const std::string& mode, const std::string& format, bool oracle) -> py::tuple {
            ModelConfig cfg;
            std::ostringstream out, err;
            try {
                cfg = parse_config(config);
                if (!mode.empty()) cfg.mode = mode;
                if (!format.empty()) cfg.format = format;
            } catch (const ConfigError& e) {
                return py::make_tuple(2, std::string(), std::string("config error: ") + e.what() + "\n");
            }
            int rc;
            {
                py::gil_scoped_release release;
                rc = run(cfg, out, err, oracle);
            }
            return py::make_tuple(rc, out.str(), err.str());
        },
        py::arg("config"), py::arg("mode") = "", py::arg("format") = "", py::arg("oracle") = false,
        "Run a JSON configuration; returns (exit_code, output, error_text).");

    m.def("golden_suites", &golden_suites);
    m.def(
        "verify_golden",
        [](const std::string& suite) {
            py::list out;
            for (auto& r : verify_golden(suite)) out.append(py::make_tuple(r.table, r.pass, r.diff));
            return out;
        },
        py::arg("suite") = "all", "List of (table, passed, diff_lines).");
}
