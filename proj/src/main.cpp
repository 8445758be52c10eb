#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "efae/checks.hpp"
#include "efae/graphs.hpp"
#include "efae/io.hpp"
#include "efae/oracle.hpp"
#include "efae/reductions.hpp"
#include "efae/relaxed.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 3;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw efae::Error(efae::ErrorCode::ParseError, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw efae::Error(efae::ErrorCode::ParseError, "cannot write '" + path + "'");
  out << content;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content << "\n";
  else
    write_file(out_path, content + "\n");
}

int cmd_solve(const std::string& file, const std::string& algorithm,
              const std::string& witness_path) {
  const efae::Instance inst = efae::parse_instance(read_file(file));
  std::string engine = algorithm;
  if (engine == "auto") {
    const efae::EngineChoice choice = efae::select_algorithm(inst);
    engine = choice.engine;
    std::cout << "engine: " << engine << "\n";
    std::cout << "rationale: " << choice.rationale << "\n";
  } else {
    std::cout << "engine: " << engine << "\n";
  }
  const efae::SolveOutcome outcome = efae::run_engine(inst, engine);
  std::cout << "answer: " << efae::to_string(outcome.answer) << "\n";
  std::cout << "nodes: " << outcome.stats.nodes << "\n";
  if (outcome.witness && !witness_path.empty())
    write_file(witness_path, efae::serialize_allocation(inst, *outcome.witness) + "\n");
  switch (outcome.answer) {
    case efae::Answer::Yes: return kExitYes;
    case efae::Answer::No: return kExitNo;
    case efae::Answer::ResourceLimit: return kExitResourceLimit;
  }
  return kExitUsage;
}

int cmd_check(const std::string& instance_file, const std::string& allocation_file,
              const std::string& notion_name) {
  const efae::Instance inst = efae::parse_instance(read_file(instance_file));
  const efae::Allocation alloc = efae::parse_allocation(read_file(allocation_file), inst);
  if (!efae::allocation_extends(inst, alloc)) {
    std::cerr << "allocation does not extend the fixed assignment\n";
    std::cout << "fail\n";
    return kExitNo;
  }
  const auto notion = efae::parse_notion(notion_name);
  bool ok = false;
  switch (*notion) {
    case efae::Notion::Ef: ok = efae::is_envy_free(inst, alloc); break;
    case efae::Notion::Ef1: ok = efae::is_ef1(inst, alloc); break;
    case efae::Notion::Efx: ok = efae::is_efx(inst, alloc); break;
  }
  std::cout << (ok ? "pass" : "fail") << "\n";
  return ok ? kExitYes : kExitNo;
}

int cmd_extend_ef1(const std::string& instance_file, const std::string& engine_name,
                   const std::string& out_path) {
  const efae::Instance inst = efae::parse_instance(read_file(instance_file));
  const efae::Ef1Engine engine = engine_name == "envy-cycle" ? efae::Ef1Engine::EnvyCycle
                                                             : efae::Ef1Engine::RoundRobin;
  const efae::Allocation alloc = efae::extend_to_ef1(inst, engine);
  emit(out_path, efae::serialize_allocation(inst, alloc));
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"envy-free allocation extension toolkit"};
  app.require_subcommand(1);
  int rc = kExitYes;

  auto* solve = app.add_subcommand("solve", "answer the extension query of an instance document");
  std::string solve_file, algorithm = "auto", witness_path;
  solve->add_option("file", solve_file, "instance document")->required();
  solve->add_option("--algorithm", algorithm, "engine override")
      ->check(CLI::IsMember({"auto", "brute", "fpt-k-nt", "dp-p-nt", "ilp-p-mt"}));
  solve->add_option("--witness", witness_path, "write the YES witness to this file");
  solve->callback([&] { rc = cmd_solve(solve_file, algorithm, witness_path); });

  auto* check = app.add_subcommand("check", "test an allocation against a fairness notion");
  std::string check_instance, check_allocation, notion = "ef";
  check->add_option("instance", check_instance)->required();
  check->add_option("allocation", check_allocation)->required();
  check->add_option("--notion", notion)->check(CLI::IsMember({"ef", "ef1", "efx"}));
  check->callback([&] { rc = cmd_check(check_instance, check_allocation, notion); });

  auto* extend = app.add_subcommand("extend-ef1", "complete an envy-free assignment to EF1");
  std::string extend_instance, extend_engine = "round-robin", extend_out;
  extend->add_option("instance", extend_instance)->required();
  extend->add_option("--engine", extend_engine)
      ->check(CLI::IsMember({"round-robin", "envy-cycle"}));
  extend->add_option("--out", extend_out, "write the allocation to this file");
  extend->callback([&] { rc = cmd_extend_ef1(extend_instance, extend_engine, extend_out); });

  auto* gen = app.add_subcommand("gen", "produce instance documents");
  gen->require_subcommand(1);

  auto* gen_rand = gen->add_subcommand("random", "seeded random instance with exact type counts");
  efae::GenSpec spec;
  std::string variant = "efae", gen_out;
  gen_rand->add_option("--seed", spec.seed);
  gen_rand->add_option("--n", spec.n);
  gen_rand->add_option("--m", spec.m);
  gen_rand->add_option("--n-t", spec.n_t);
  gen_rand->add_option("--m-t", spec.m_t);
  gen_rand->add_option("--vmax", spec.vmax);
  gen_rand->add_option("--open-fraction", spec.open_fraction);
  gen_rand->add_option("--variant", variant)->check(CLI::IsMember({"efae", "refae", "fefae"}));
  gen_rand->add_option("--out", gen_out);
  gen_rand->callback([&] {
    spec.variant = variant == "refae"  ? efae::Query::Variant::Refae
                   : variant == "fefae" ? efae::Query::Variant::Fefae
                                        : efae::Query::Variant::Efae;
    emit(gen_out, efae::serialize_instance(efae::gen_random(spec)));
  });

  auto* gen_mcq = gen->add_subcommand("mcq", "multicolored-clique gadget from a colored graph");
  std::string mcq_graph, mcq_out;
  gen_mcq->add_option("graph", mcq_graph, "colored graph file")->required();
  gen_mcq->add_option("--out", mcq_out);
  gen_mcq->callback([&] {
    const efae::ColoredGraph g = efae::parse_colored_graph(read_file(mcq_graph));
    emit(mcq_out, efae::serialize_instance(efae::mcq_to_efae(g)));
  });

  auto* gen_is = gen->add_subcommand("is", "independent-set gadget from a graph");
  std::string is_graph, is_out;
  int ell = 1;
  bool as_fefae = false;
  gen_is->add_option("graph", is_graph, "graph file")->required();
  gen_is->add_option("--ell", ell, "independent set size")->required();
  gen_is->add_flag("--fefae", as_fefae, "pose the query as FEFAE with p=2");
  gen_is->add_option("--out", is_out);
  gen_is->callback([&] {
    const efae::Graph g = efae::parse_graph(read_file(is_graph));
    emit(is_out, efae::serialize_instance(efae::is_to_refae(g, ell, as_fefae)));
  });

  auto* gen_cat = gen->add_subcommand("catalog", "fixed counterexample instances");
  std::string cat_name, cat_out;
  bool cat_list = false;
  gen_cat->add_option("name", cat_name, "catalog entry name");
  gen_cat->add_flag("--list", cat_list, "print the available names");
  gen_cat->add_option("--out", cat_out);
  gen_cat->callback([&] {
    const auto& entries = efae::counterexample_catalog();
    if (cat_list || cat_name.empty()) {
      std::string names;
      for (const auto& entry : entries) names += entry.name + "\n";
      std::cout << names;
      return;
    }
    for (const auto& entry : entries)
      if (entry.name == cat_name) {
        emit(cat_out, efae::serialize_instance(entry.instance));
        return;
      }
    throw efae::Error(efae::ErrorCode::BadParams, "unknown catalog entry '" + cat_name + "'");
  });

  auto* bench = app.add_subcommand("bench", "run engines over a directory of documents");
  std::string bench_dir;
  std::vector<std::string> engines;
  int timeout_ms = 0;
  bench->add_option("dir", bench_dir)->required();
  bench->add_option("--engines", engines, "engine ids (default: all applicable)");
  bench->add_option("--timeout", timeout_ms, "per-solve budget in milliseconds");
  bench->callback([&] {
    const efae::BenchReport report = efae::run_bench(bench_dir, engines, timeout_ms);
    std::cout << report.csv;
    rc = report.disagreement ? kExitNo : kExitYes;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const efae::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
