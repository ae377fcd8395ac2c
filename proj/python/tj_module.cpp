#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tj/gen.hpp"
#include "tj/io.hpp"
#include "tj/kernel.hpp"
#include "tj/solver.hpp"
#include "tj/vcdim.hpp"

namespace py = pybind11;
using namespace tj;

namespace {

KernelConfig config_from_kwargs(const std::string& mode, std::optional<std::int64_t> big,
                                std::optional<std::int64_t> indep, bool certify) {
  KernelConfig cfg;
  if (mode == "aggressive") {
    cfg.mode = KernelMode::Aggressive;
    cfg.big_threshold_override = big;
    cfg.indep_threshold_override = indep;
    cfg.certify = certify;
  } else if (mode != "faithful") {
    throw GraphError("mode must be 'faithful' or 'aggressive'");
  }
  return cfg;
}

py::dict decision_to_dict(const TjDecision& dec) {
  py::dict d;
  d["answer"] = answer_name(dec.answer);
  d["method"] = method_name(dec.method);
  d["heuristic"] = dec.heuristic;
  d["explored_states"] = dec.explored_states;
  d["witness_on_kernel"] = dec.witness_on_kernel;
  if (dec.witness) d["witness"] = *dec.witness;
  else d["witness"] = py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_tjcore, m) {
  m.doc() = "Token Jumping reconfiguration core";

  py::register_exception<GraphError>(m, "GraphError");

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def("add_vertex", &Graph::add_vertex)
      .def("add_edge", &Graph::add_edge)
      .def("remove_vertex", &Graph::remove_vertex)
      .def("has_vertex", &Graph::has_vertex)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("vertices", &Graph::vertices)
      .def("neighbors",
           [](const Graph& g, VertexId v) {
             const auto& nb = g.neighbors(v);
             return std::vector<VertexId>(nb.begin(), nb.end());
           })
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count);

  py::class_<Instance>(m, "Instance")
      .def(py::init([](Graph g, int k, VertexSet start, VertexSet target, int ell,
                       bool ell_certified) {
             Instance inst{std::move(g), k, std::move(start), std::move(target), ell,
                           ell_certified};
             inst.validate();
             return inst;
           }),
           py::arg("graph"), py::arg("k"), py::arg("start"), py::arg("target"),
           py::arg("ell") = 2, py::arg("ell_certified") = false)
      .def_readonly("k", &Instance::k)
      .def_readonly("start", &Instance::start)
      .def_readonly("target", &Instance::target)
      .def_readonly("ell", &Instance::ell)
      .def_readonly("graph", &Instance::graph);

  m.def("is_independent", &is_independent);
  m.def("contains_biclique", &contains_biclique);
  m.def("kst_bound", &kst_bound);
  m.def("kst_bipartite_bound", &kst_bipartite_bound);
  m.def("greedy_independent_set", &greedy_independent_set);
  m.def("tj_adjacent", &tj_adjacent);

  m.def(
      "oracle_decide",
      [](const Instance& inst, std::uint64_t max_states, double max_seconds) {
        return decision_to_dict(oracle_decide(inst, {max_states, max_seconds}));
      },
      py::arg("instance"), py::arg("max_states") = 5'000'000, py::arg("max_seconds") = 60.0);

  m.def(
      "decide",
      [](const Instance& inst, const std::string& mode, std::optional<std::int64_t> big,
         std::optional<std::int64_t> indep, bool certify, std::uint64_t max_states,
         double max_seconds) {
        return decision_to_dict(
            decide(inst, config_from_kwargs(mode, big, indep, certify), {max_states, max_seconds}));
      },
      py::arg("instance"), py::arg("mode") = "faithful", py::arg("big_threshold") = py::none(),
      py::arg("indep_threshold") = py::none(), py::arg("certify") = false,
      py::arg("max_states") = 5'000'000, py::arg("max_seconds") = 60.0);

  m.def(
      "kernelize",
      [](const Instance& inst, const std::string& mode, std::optional<std::int64_t> big,
         std::optional<std::int64_t> indep, bool certify) {
        const KernelOutcome out = kernelize(inst, config_from_kwargs(mode, big, indep, certify));
        py::dict d;
        d["decided_yes"] = out.decided_yes;
        d["reason"] = out.reason;
        d["trace_json"] = out.trace.to_json();
        if (out.reduced) d["reduced"] = *out.reduced;
        else d["reduced"] = py::none();
        return d;
      },
      py::arg("instance"), py::arg("mode") = "faithful", py::arg("big_threshold") = py::none(),
      py::arg("indep_threshold") = py::none(), py::arg("certify") = false);

  m.def("big_threshold", [](int k, int ell) { return big_threshold(k, ell, {}); });
  m.def("vc_dimension", &vc_dimension, py::arg("graph"), py::arg("cap") = 3);
  m.def(
      "vc1_decide",
      [](const Instance& inst) { return decision_to_dict(vc1_decide(inst)); },
      py::arg("instance"));

  m.def("parse_instance", &parse_instance_string);
  m.def("serialize_instance", &serialize_instance, py::arg("instance"),
        py::arg("original_n") = -1);

  m.def(
      "gen_girth5",
      [](int n, std::uint64_t seed, int edge_attempts) {
        return gen_graph(GenSpec{seed, n, Girth5{edge_attempts}, 1});
      },
      py::arg("n"), py::arg("seed"), py::arg("edge_attempts") = 0);
  m.def(
      "gen_instance",
      [](const Graph& g, int k, std::uint64_t seed, int ell) {
        return gen_instance(g, k, seed, ell);
      },
      py::arg("graph"), py::arg("k"), py::arg("seed"), py::arg("ell") = 2);
}
