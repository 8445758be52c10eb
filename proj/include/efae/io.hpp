#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "efae/types.hpp"

namespace efae {

// Instance documents are JSON objects with the keys agents, items, valuations,
// assigned and query, in that order. parse accepts any key order; serialize
// always emits the canonical order, compactly, so output is byte-stable.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Allocation documents reuse the assigned-map shape, covering every item.
Allocation parse_allocation(const std::string& text, const Instance& inst);
std::string serialize_allocation(const Instance& inst, const Allocation& alloc);

struct EngineChoice {
  std::string engine;  // brute | fpt-k-nt | dp-p-nt | ilp-p-mt
  std::string rationale;
};

// Routes an instance to the cheapest applicable solver: the open-item
// branching engine for EFAE while its bound is small, the count model while
// p times the number of open item types is small, the value table while the
// total value is small, and the exhaustive solver otherwise.
EngineChoice select_algorithm(const Instance& inst);

// Runs one engine by id; "auto" resolves through select_algorithm. The extra
// id "noop" always answers No — it exists so the benchmark's disagreement
// detection can be tested against a knowingly wrong engine.
SolveOutcome run_engine(const Instance& inst, const std::string& engine,
                        std::optional<std::chrono::steady_clock::time_point> deadline = {});

struct GenSpec {
  std::uint64_t seed = 0;
  int n = 2;
  int m = 2;
  int n_t = 1;
  int m_t = 1;
  Value vmax = 9;
  double open_fraction = 0.5;
  Query::Variant variant = Query::Variant::Efae;
};

// Draws an n_t-by-m_t matrix with distinct rows and distinct columns, then
// replicates rows and columns onto the full agent and item sets through
// surjective type maps, so the requested type counts are achieved exactly.
// Identical specs produce identical instances.
Instance gen_random(const GenSpec& spec);

struct BenchReport {
  std::string csv;  // columns: path, engine, answer, millis, nodes
  bool disagreement = false;
};

// Solves every .json document in dir with each engine and tabulates the
// results. An empty engine list means "every engine applicable to the
// instance's variant". Differing YES/NO answers on one document add a
// DISAGREEMENT row and set the flag. Per-file errors become rows too and do
// not stop the run.
BenchReport run_bench(const std::string& dir, const std::vector<std::string>& engines,
                      int timeout_ms = 0);

}  // namespace efae
