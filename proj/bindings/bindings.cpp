#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netid/errors.hpp"
#include "netid/identities.hpp"
#include "netid/random_graph.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_netid, m) {
    m.doc() = "Resistive network toolkit: graph Laplacians, pseudoinverses, resistance and "
              "voltage functions, equilibrium measures, transition kernels, and Foster-type "
              "identity certification.";

    py::register_exception<netid::Error>(m, "Error");

    py::class_<netid::Edge>(m, "Edge")
        .def(py::init<int, int, double>(), py::arg("a"), py::arg("b"), py::arg("length"))
        .def_readonly("a", &netid::Edge::a)
        .def_readonly("b", &netid::Edge::b)
        .def_readonly("length", &netid::Edge::length)
        .def("__repr__", [](const netid::Edge& e) {
            return "Edge(" + std::to_string(e.a) + ", " + std::to_string(e.b) + ", " +
                   std::to_string(e.length) + ")";
        });

    py::class_<netid::MetrizedGraph>(m, "MetrizedGraph")
        .def(py::init<std::vector<std::string>, std::vector<netid::Edge>>(), py::arg("vertices"),
             py::arg("edges"))
        .def_property_readonly("vertices", &netid::MetrizedGraph::vertices)
        .def_property_readonly("edges", &netid::MetrizedGraph::edges)
        .def_property_readonly("n", &netid::MetrizedGraph::vertex_count)
        .def_property_readonly("e", &netid::MetrizedGraph::edge_count)
        .def("index_of", &netid::MetrizedGraph::index_of, py::arg("id"))
        .def("vertex_name", &netid::MetrizedGraph::vertex_name, py::arg("i"))
        .def("is_optimal", &netid::MetrizedGraph::is_optimal)
        .def("serialize", &netid::MetrizedGraph::serialize)
        .def("__eq__", [](const netid::MetrizedGraph& a, const netid::MetrizedGraph& b) {
            return a == b;
        });

    py::class_<netid::ConductanceProfile>(m, "ConductanceProfile")
        .def_readonly("pair", &netid::ConductanceProfile::pair)
        .def_readonly("vertex", &netid::ConductanceProfile::vertex);

    py::class_<netid::DiscreteLaplacian>(m, "DiscreteLaplacian")
        .def(py::init<Eigen::MatrixXd>(), py::arg("matrix"))
        .def_property_readonly("matrix", &netid::DiscreteLaplacian::matrix)
        .def_property_readonly("n", &netid::DiscreteLaplacian::size);

    py::class_<netid::PseudoInverse>(m, "PseudoInverse")
        .def_property_readonly("matrix", &netid::PseudoInverse::matrix)
        .def_property_readonly("n", &netid::PseudoInverse::size)
        .def_property_readonly("condition_estimate", &netid::PseudoInverse::condition_estimate)
        .def_property_readonly("condition_warning", &netid::PseudoInverse::condition_warning);

    py::class_<netid::ResistanceMatrix>(m, "ResistanceMatrix")
        .def_property_readonly("matrix", &netid::ResistanceMatrix::matrix)
        .def("__call__", &netid::ResistanceMatrix::operator(), py::arg("p"), py::arg("q"));

    py::class_<netid::EquilibriumMeasure>(m, "EquilibriumMeasure")
        .def_readonly("base", &netid::EquilibriumMeasure::base)
        .def_readonly("values", &netid::EquilibriumMeasure::values)
        .def("min_off_base", &netid::EquilibriumMeasure::min_off_base);

    py::class_<netid::EquilibriumTable>(m, "EquilibriumTable")
        .def(py::init<const netid::DiscreteLaplacian&>(), py::arg("laplacian"))
        .def_property_readonly("matrix", &netid::EquilibriumTable::matrix)
        .def("resistance", &netid::EquilibriumTable::resistance, py::arg("i"), py::arg("t"))
        .def("voltage", &netid::EquilibriumTable::voltage, py::arg("i"), py::arg("s"),
             py::arg("t"));

    py::class_<netid::TransitionKernel>(m, "TransitionKernel")
        .def_property_readonly("matrix", &netid::TransitionKernel::matrix)
        .def_property_readonly("vertex_conductance", &netid::TransitionKernel::vertex_conductance)
        .def("kstep", &netid::TransitionKernel::kstep, py::arg("k"),
             py::return_value_policy::copy)
        .def("trace_sequence", &netid::TransitionKernel::trace_sequence, py::arg("kmax"));

    py::class_<netid::IdentityCheck>(m, "IdentityCheck")
        .def_property_readonly("name",
                               [](const netid::IdentityCheck& c) { return to_string(c.name); })
        .def_readonly("k", &netid::IdentityCheck::k)
        .def_readonly("source", &netid::IdentityCheck::source)
        .def_readonly("lhs", &netid::IdentityCheck::lhs)
        .def_readonly("rhs", &netid::IdentityCheck::rhs)
        .def_readonly("residual", &netid::IdentityCheck::residual)
        .def_readonly("passed", &netid::IdentityCheck::pass)
        .def("__repr__", [](const netid::IdentityCheck& c) {
            return "IdentityCheck(" + to_string(c.name) + ", k=" + std::to_string(c.k) +
                   ", residual=" + std::to_string(c.residual) + ", " +
                   (c.pass ? "pass" : "FAIL") + ")";
        });

    py::class_<netid::IdentityReport>(m, "IdentityReport")
        .def_readonly("n", &netid::IdentityReport::n)
        .def_readonly("e", &netid::IdentityReport::e)
        .def_readonly("tolerance", &netid::IdentityReport::tolerance)
        .def_readonly("checks", &netid::IdentityReport::checks)
        .def_readonly("passed", &netid::IdentityReport::pass)
        .def("to_json", &netid::report_to_json);

    m.def("parse_edge_list", [](const std::string& text) { return netid::parse_edge_list(text); },
          py::arg("text"));
    m.def("optimalize", &netid::optimalize, py::arg("graph"));
    m.def("conductance_profile", &netid::conductance_profile, py::arg("graph"));
    m.def("laplacian", &netid::laplacian, py::arg("graph"));
    m.def("pseudo_inverse", &netid::pseudo_inverse, py::arg("laplacian"));
    m.def("solve_centered", &netid::solve_centered, py::arg("laplacian"), py::arg("b"),
          py::arg("pin"));
    m.def("resistance_matrix", &netid::resistance_matrix, py::arg("pinv"));
    m.def("voltage", &netid::voltage, py::arg("pinv"), py::arg("p"), py::arg("q"), py::arg("s"));
    m.def("voltage_from_resistance", &netid::voltage_from_resistance, py::arg("resistance"),
          py::arg("p"), py::arg("q"), py::arg("s"));
    m.def("y_reduction",
          [](const netid::ResistanceMatrix& r, int x, int p, int q) {
              netid::YBranches b = netid::y_reduction(r, x, p, q);
              return py::make_tuple(b.at_p, b.at_q, b.at_x);
          },
          py::arg("resistance"), py::arg("x"), py::arg("p"), py::arg("q"),
          "Branch voltages (j_p(x,q), j_q(x,p), j_x(p,q)) of the Y-equivalent on x, p, q.");
    m.def("equilibrium_measure", &netid::equilibrium_measure, py::arg("laplacian"), py::arg("i"));
    m.def("resistance_via_equilibrium", &netid::resistance_via_equilibrium, py::arg("laplacian"),
          py::arg("i"), py::arg("t"));
    m.def("voltage_via_equilibrium", &netid::voltage_via_equilibrium, py::arg("laplacian"),
          py::arg("i"), py::arg("s"), py::arg("t"));
    m.def("transition_matrix", &netid::transition_matrix, py::arg("profile"));
    m.def("simulate_kstep_frequencies", &netid::simulate_kstep_frequencies, py::arg("graph"),
          py::arg("start"), py::arg("k"), py::arg("walks"), py::arg("seed"));
    m.def("theorem_main_check", &netid::theorem_main_check, py::arg("graph"), py::arg("s"),
          py::arg("k"), py::arg("tolerance") = 1e-8);
    m.def("extended_foster_check", &netid::extended_foster_check, py::arg("graph"), py::arg("k"),
          py::arg("tolerance") = 1e-8);
    m.def("recurrence_check", &netid::recurrence_check, py::arg("graph"), py::arg("k"),
          py::arg("tolerance") = 1e-8);
    m.def("low_order_identity", &netid::low_order_identity, py::arg("graph"), py::arg("s"),
          py::arg("order"), py::arg("tolerance") = 1e-8);
    m.def("low_order_literal",
          [](const netid::MetrizedGraph& g, int s, int order) {
              return netid::low_order_literal(g, s, order);
          },
          py::arg("graph"), py::arg("s"), py::arg("order"));
    m.def("full_report",
          [](const netid::MetrizedGraph& g, std::optional<int> source, int kmax, double tolerance) {
              return netid::full_report(g, source, kmax, tolerance);
          },
          py::arg("graph"), py::arg("source") = py::none(), py::arg("kmax") = 10,
          py::arg("tolerance") = 1e-8);
    m.def("report_to_json", &netid::report_to_json, py::arg("report"));
    m.def("report_from_json", &netid::report_from_json, py::arg("text"));
    m.def("generate_random_graph", &netid::generate_random_graph, py::arg("n"),
          py::arg("edge_prob"), py::arg("min_length"), py::arg("max_length"), py::arg("seed"));
}
