#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "clusterfit/cubic.hpp"
#include "clusterfit/graph.hpp"
#include "clusterfit/graph_io.hpp"
#include "clusterfit/measures.hpp"
#include "clusterfit/rational.hpp"
#include "clusterfit/reductions.hpp"
#include "clusterfit/solvers.hpp"
#include "clusterfit/subsets.hpp"
#include "clusterfit/verify.hpp"

namespace py = pybind11;
using namespace cfit;

namespace {

VertexSubset subset_from_any(const py::object& obj, int n) {
    if (py::isinstance<VertexSubset>(obj)) {
        return obj.cast<VertexSubset>();
    }
    auto vertices = obj.cast<std::vector<int>>();
    return VertexSubset(n, vertices);
}

template <typename Kind>
Kind parse_kind_or_throw(const std::string& name,
                         std::optional<Kind> (*parser)(std::string_view)) {
    auto kind = parser(name);
    if (!kind) {
        throw std::invalid_argument("unknown kind '" + name + "'");
    }
    return *kind;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact graph cluster measures, brute-force solvers and reduction gadgets";

    py::class_<Rational>(m, "Rational")
        .def(py::init<long long>(), py::arg("value"))
        .def(py::init<long long, long long>(), py::arg("num"), py::arg("den"))
        .def_static("parse", &Rational::parse, py::arg("text"))
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("is_integer", &Rational::is_integer)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
        .def("__float__",
             [](const Rational& r) {
                 return static_cast<double>(r.num()) / static_cast<double>(r.den());
             })
        .def("__hash__",
             [](const Rational& r) {
                 return py::hash(py::make_tuple(r.num(), r.den()));
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__eq__", [](const Rational& r, long long v) { return r == Rational(v); })
        .def("__lt__", [](const Rational& r, long long v) { return r < Rational(v); })
        .def("__le__", [](const Rational& r, long long v) { return r <= Rational(v); })
        .def("__gt__", [](const Rational& r, long long v) { return r > Rational(v); })
        .def("__ge__", [](const Rational& r, long long v) { return r >= Rational(v); });

    py::class_<VertexSubset>(m, "VertexSubset")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<int>& vertices) {
                 return VertexSubset(n, vertices);
             }),
             py::arg("n"), py::arg("vertices"))
        .def_property_readonly("context", &VertexSubset::context_size)
        .def("count", &VertexSubset::count)
        .def("__len__", &VertexSubset::count)
        .def("__contains__", &VertexSubset::contains)
        .def("contains", &VertexSubset::contains)
        .def("insert", &VertexSubset::insert)
        .def("erase", &VertexSubset::erase)
        .def("vertices", &VertexSubset::vertices)
        .def("complement", &VertexSubset::complement)
        .def("mask", &VertexSubset::mask)
        .def(py::self == py::self)
        .def("__repr__", [](const VertexSubset& s) {
            std::ostringstream out;
            out << "VertexSubset(" << s.context_size() << ", [";
            bool first = true;
            for (int v : s.vertices()) {
                out << (first ? "" : ", ") << v;
                first = false;
            }
            out << "])";
            return out.str();
        });

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("degree", &Graph::degree)
        .def("neighbors",
             [](const Graph& g, int v) { return g.neighbors(v); })
        .def("has_edge", &Graph::has_edge)
        .def("complement", &Graph::complement)
        .def("is_cubic", &Graph::is_cubic)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); },
          py::arg("text"));
    m.def("write_graph", &write_graph, py::arg("graph"));
    m.def("graph_hash", &graph_hash, py::arg("graph"));

    m.def("cut_size",
          [](const Graph& g, const py::object& s) {
              return cut_size(g, subset_from_any(s, g.vertex_count()));
          },
          py::arg("graph"), py::arg("subset"));
    m.def("degree_sum",
          [](const Graph& g, const py::object& s) {
              return degree_sum(g, subset_from_any(s, g.vertex_count()));
          },
          py::arg("graph"), py::arg("subset"));
    m.def("induced_edge_count",
          [](const Graph& g, const py::object& s) {
              return induced_edge_count(g, subset_from_any(s, g.vertex_count()));
          },
          py::arg("graph"), py::arg("subset"));

    m.def("conductance",
          [](const Graph& g, const py::object& s) {
              return conductance(g, subset_from_any(s, g.vertex_count()));
          },
          py::arg("graph"), py::arg("subset"));
    m.def("local_density",
          [](const Graph& g, const py::object& s) {
              return local_density(g, subset_from_any(s, g.vertex_count()));
          },
          py::arg("graph"), py::arg("subset"));
    m.def("relative_density",
          [](const Graph& g, const py::object& s) {
              return relative_density(g, subset_from_any(s, g.vertex_count()));
          },
          py::arg("graph"), py::arg("subset"));
    m.def("single_cluster_editing",
          [](const Graph& g, const py::object& s) {
              return single_cluster_editing(g, subset_from_any(s, g.vertex_count()));
          },
          py::arg("graph"), py::arg("subset"));

    m.def("generate_random_cubic", &generate_random_cubic, py::arg("n"), py::arg("seed"));
    m.def("all_cubic_graphs", &all_cubic_graphs, py::arg("n"));
    m.def("binomial", &binomial, py::arg("n"), py::arg("k"));

    py::class_<Optimum>(m, "Optimum")
        .def_readonly("witness", &Optimum::witness)
        .def_readonly("value", &Optimum::value)
        .def_readonly("explored", &Optimum::explored)
        .def_readonly("degenerate", &Optimum::degenerate)
        .def("__repr__", [](const Optimum& o) {
            return "Optimum(value=" + o.value.str() + ")";
        });

    m.def("max_cut", &max_cut, py::arg("graph"), py::arg("workers") = 1);
    m.def("min_bisection", &min_bisection, py::arg("graph"), py::arg("workers") = 1);
    m.def("min_conductance", &min_conductance, py::arg("graph"), py::arg("workers") = 1);
    m.def("best_density",
          [](const Graph& g, int k, const std::string& kind, int workers) {
              if (kind != "local" && kind != "relative") {
                  throw std::invalid_argument("density kind must be 'local' or 'relative'");
              }
              return best_density(g, k,
                                  kind == "local" ? DensityKind::local : DensityKind::relative,
                                  workers);
          },
          py::arg("graph"), py::arg("k"), py::arg("kind") = "relative", py::arg("workers") = 1);
    m.def("min_editing", &min_editing, py::arg("graph"), py::arg("k"), py::arg("workers") = 1);
    m.def("local_search_min_conductance", &local_search_min_conductance, py::arg("graph"),
          py::arg("seed"), py::arg("restarts") = 8);

    py::class_<Decision>(m, "Decision")
        .def_readonly("yes", &Decision::yes)
        .def_readonly("witness", &Decision::witness)
        .def_readonly("optimum", &Decision::optimum)
        .def("__bool__", [](const Decision& d) { return d.yes; })
        .def("__repr__", [](const Decision& d) {
            return std::string("Decision(") + (d.yes ? "yes" : "no") + ")";
        });

    m.def("decide",
          [](const Graph& g, const std::string& kind, const py::object& threshold,
             std::optional<int> k, int workers) {
              DecisionInstance inst;
              inst.graph = g;
              inst.kind = parse_kind_or_throw<ProblemKind>(kind, &parse_problem_kind);
              inst.k = k;
              if (py::isinstance<Rational>(threshold)) {
                  inst.threshold = threshold.cast<Rational>();
              } else if (py::isinstance<py::int_>(threshold)) {
                  inst.threshold = Rational(threshold.cast<long long>());
              } else {
                  inst.threshold = Rational::parse(threshold.cast<std::string>());
              }
              return decide(inst, workers);
          },
          py::arg("graph"), py::arg("kind"), py::arg("threshold"), py::arg("k") = std::nullopt,
          py::arg("workers") = 1);

    py::class_<ConductanceReduction>(m, "ConductanceReduction")
        .def_readonly("source", &ConductanceReduction::source)
        .def_readonly("a", &ConductanceReduction::a)
        .def_readonly("target", &ConductanceReduction::target)
        .def_readonly("phi", &ConductanceReduction::phi);

    py::class_<DensityReduction>(m, "DensityReduction")
        .def_readonly("source", &DensityReduction::source)
        .def_readonly("a", &DensityReduction::a)
        .def_readonly("k", &DensityReduction::k)
        .def_readonly("r", &DensityReduction::r);

    py::class_<EditingReduction>(m, "EditingReduction")
        .def_readonly("source", &EditingReduction::source)
        .def_readonly("a", &EditingReduction::a)
        .def_readonly("k", &EditingReduction::k)
        .def_readonly("m", &EditingReduction::m);

    m.def("build_conductance_instance", &build_conductance_instance, py::arg("graph"),
          py::arg("a"));
    m.def("build_density_instance", &build_density_instance, py::arg("graph"), py::arg("a"));
    m.def("build_editing_instance", &build_editing_instance, py::arg("graph"), py::arg("a"));
    m.def("conductance_threshold", &conductance_threshold, py::arg("n"), py::arg("a"));
    m.def("density_threshold", &density_threshold, py::arg("n"), py::arg("a"));
    m.def("editing_budget", &editing_budget, py::arg("n"), py::arg("a"));

    m.def("lift_cut",
          [](const py::object& a_set, int n) {
              return lift_cut(subset_from_any(a_set, n), n);
          },
          py::arg("a_set"), py::arg("n"));
    m.def("project_cut", &project_cut, py::arg("subset"), py::arg("n"));
    m.def("predicted_conductance",
          [](const ConductanceReduction& red, const py::object& s) {
              return predicted_conductance(
                  red, subset_from_any(s, red.target.vertex_count()));
          },
          py::arg("reduction"), py::arg("subset"));
    m.def("conductance_of_lift",
          [](const ConductanceReduction& red, const py::object& a_set) {
              return conductance_of_lift(
                  red, subset_from_any(a_set, red.source.vertex_count()));
          },
          py::arg("reduction"), py::arg("a_set"));

    py::class_<ThresholdRow>(m, "ThresholdRow")
        .def_readonly("a", &ThresholdRow::a)
        .def_readonly("source_yes", &ThresholdRow::source_yes)
        .def_readonly("target_yes", &ThresholdRow::target_yes)
        .def_readonly("witness_ok", &ThresholdRow::witness_ok)
        .def_readonly("agree", &ThresholdRow::agree);

    py::class_<GraphVerification>(m, "GraphVerification")
        .def_readonly("n", &GraphVerification::n)
        .def_readonly("index", &GraphVerification::index)
        .def_readonly("hash", &GraphVerification::hash)
        .def_readonly("rows", &GraphVerification::rows)
        .def_readonly("mismatches", &GraphVerification::mismatches)
        .def_readonly("witness_failures", &GraphVerification::witness_failures)
        .def_readonly("elapsed_ms", &GraphVerification::elapsed_ms);

    py::class_<VerificationSummary>(m, "VerificationSummary")
        .def_readonly("graphs", &VerificationSummary::graphs)
        .def_readonly("rows", &VerificationSummary::rows)
        .def_readonly("mismatches", &VerificationSummary::mismatches)
        .def_readonly("witness_failures", &VerificationSummary::witness_failures)
        .def_readonly("elapsed_ms", &VerificationSummary::elapsed_ms)
        .def("__repr__", [](const VerificationSummary& s) {
            return "VerificationSummary(kind=" + std::string(reduction_kind_name(s.kind)) +
                   ", rows=" + std::to_string(s.rows) +
                   ", mismatches=" + std::to_string(s.mismatches) + ")";
        });

    m.def("verify_reduction",
          [](const std::string& kind, int n_max, int workers, const py::object& sink,
             std::optional<int> a_override) {
              GraphVerificationSink cpp_sink;
              if (!sink.is_none()) {
                  cpp_sink = [sink](const GraphVerification& report) { sink(report); };
              }
              return verify_reduction(
                  parse_kind_or_throw<ReductionKind>(kind, &parse_reduction_kind), n_max,
                  workers, cpp_sink, a_override);
          },
          py::arg("kind"), py::arg("n_max") = 6, py::arg("workers") = 1,
          py::arg("sink") = py::none(), py::arg("a") = std::nullopt);

    m.attr("__version__") = "0.1.0";
}
