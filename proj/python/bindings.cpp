#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "efae/checks.hpp"
#include "efae/graphs.hpp"
#include "efae/io.hpp"
#include "efae/oracle.hpp"
#include "efae/reductions.hpp"
#include "efae/relaxed.hpp"

namespace py = pybind11;

namespace {

using namespace efae;

py::object solve_doc(const std::string& document, const std::string& engine) {
  const Instance inst = parse_instance(document);
  const SolveOutcome out = run_engine(inst, engine);
  py::dict d;
  d["answer"] = std::string(to_string(out.answer));
  d["nodes"] = out.stats.nodes;
  d["states"] = out.stats.states;
  d["witness"] = out.witness ? py::object(py::str(serialize_allocation(inst, *out.witness)))
                             : py::object(py::none());
  return d;
}

bool check_doc(const std::string& document, const std::string& allocation,
               const std::string& notion_name) {
  const Instance inst = parse_instance(document);
  const Allocation alloc = parse_allocation(allocation, inst);
  const auto notion = parse_notion(notion_name);
  if (!notion) throw Error(ErrorCode::BadParams, "unknown notion '" + notion_name + "'");
  if (!allocation_extends(inst, alloc)) return false;
  switch (*notion) {
    case Notion::Ef: return is_envy_free(inst, alloc);
    case Notion::Ef1: return is_ef1(inst, alloc);
    case Notion::Efx: return is_efx(inst, alloc);
  }
  return false;
}

Query::Variant variant_from(const std::string& name) {
  if (name == "efae") return Query::Variant::Efae;
  if (name == "refae") return Query::Variant::Refae;
  if (name == "fefae") return Query::Variant::Fefae;
  throw Error(ErrorCode::BadParams, "unknown variant '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_efae, m) {
  m.doc() = "envy-free allocation extension toolkit";
  py::register_exception<efae::Error>(m, "EfaeError");

  m.def("solve", &solve_doc, py::arg("document"), py::arg("engine") = "auto",
        "Answer the extension query of an instance document; returns answer, "
        "node/state counts and the witness allocation document on YES.");

  m.def(
      "select_algorithm",
      [](const std::string& document) {
        const EngineChoice c = select_algorithm(parse_instance(document));
        return py::make_tuple(c.engine, c.rationale);
      },
      py::arg("document"), "Engine id and rationale the router would pick.");

  m.def("check", &check_doc, py::arg("document"), py::arg("allocation"),
        py::arg("notion") = "ef",
        "Whether the allocation extends the fixed assignment and satisfies "
        "the notion (ef, ef1 or efx).");

  m.def(
      "extend_ef1",
      [](const std::string& document, const std::string& engine) {
        const Instance inst = parse_instance(document);
        const Ef1Engine e =
            engine == "envy-cycle" ? Ef1Engine::EnvyCycle : Ef1Engine::RoundRobin;
        return serialize_allocation(inst, extend_to_ef1(inst, e));
      },
      py::arg("document"), py::arg("engine") = "round-robin",
      "Complete an envy-free assignment to an allocation that is envy-free up "
      "to one item.");

  m.def(
      "gen_random",
      [](std::uint64_t seed, int n, int m, int n_t, int m_t, Value vmax,
         double open_fraction, const std::string& variant) {
        GenSpec spec;
        spec.seed = seed;
        spec.n = n;
        spec.m = m;
        spec.n_t = n_t;
        spec.m_t = m_t;
        spec.vmax = vmax;
        spec.open_fraction = open_fraction;
        spec.variant = variant_from(variant);
        return serialize_instance(gen_random(spec));
      },
      py::arg("seed") = 0, py::arg("n") = 2, py::arg("m") = 2, py::arg("n_t") = 1,
      py::arg("m_t") = 1, py::arg("vmax") = 9, py::arg("open_fraction") = 0.5,
      py::arg("variant") = "efae",
      "Seeded random instance with exact agent and item type counts.");

  m.def(
      "mcq_instance",
      [](const std::string& graph_text) {
        return serialize_instance(mcq_to_efae(parse_colored_graph(graph_text)));
      },
      py::arg("graph"), "Clique gadget instance from a colored graph text.");

  m.def(
      "is_instance",
      [](const std::string& graph_text, int ell, bool as_fefae) {
        return serialize_instance(is_to_refae(parse_graph(graph_text), ell, as_fefae));
      },
      py::arg("graph"), py::arg("ell"), py::arg("as_fefae") = false,
      "Independent-set gadget instance from a graph text.");

  m.def(
      "catalog",
      [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const CatalogEntry& e : counterexample_catalog())
          out.push_back({e.name, serialize_instance(e.instance)});
        return out;
      },
      "Named counterexample instances as (name, document) pairs.");

  m.def(
      "verify_catalog",
      [] {
        std::vector<std::pair<std::string, bool>> out;
        for (const CatalogCheck& c : efae::verify_catalog()) out.push_back({c.name, c.pass});
        return out;
      },
      "Re-derive every documented catalog property exhaustively.");

  m.def(
      "run_bench",
      [](const std::string& dir, const std::vector<std::string>& engines, int timeout_ms) {
        const BenchReport r = run_bench(dir, engines, timeout_ms);
        return py::make_tuple(r.csv, r.disagreement);
      },
      py::arg("dir"), py::arg("engines") = std::vector<std::string>{},
      py::arg("timeout_ms") = 0,
      "Run engines over a directory of instance documents; returns the CSV "
      "report and the disagreement flag.");
}
