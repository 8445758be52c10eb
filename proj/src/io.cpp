#include "efae/io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "efae/checks.hpp"
#include "efae/dp_recipients.hpp"
#include "efae/fpt_open_items.hpp"
#include "efae/ilp_recipients.hpp"
#include "efae/oracle.hpp"

namespace efae {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

const json& require_key(const json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw Error(ErrorCode::SchemaError, std::string("missing key '") + key + "'");
  return *it;
}

void reject_unknown_keys(const json& j, const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw Error(ErrorCode::SchemaError, "unknown key '" + key + "'");
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::SchemaError, std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& entry : j) {
    if (!entry.is_string())
      throw Error(ErrorCode::SchemaError, std::string(what) + " entries must be strings");
    out.push_back(entry.get<std::string>());
  }
  return out;
}

int index_of(const std::vector<std::string>& ids, const std::string& id, const char* what) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end())
    throw Error(ErrorCode::SchemaError, std::string("unknown ") + what + " '" + id + "'");
  return static_cast<int>(it - ids.begin());
}

Value integer_value(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw Error(ErrorCode::SchemaError, std::string(what) + " must be an integer");
  return j.get<Value>();
}

std::vector<int> assigned_map(const json& j, const Instance& inst, bool require_all) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, "assigned must be an object");
  std::vector<int> owner_of(inst.item_ids.size(), Instance::kOpen);
  for (const auto& [item_id, agent_id] : j.items()) {
    const int item = index_of(inst.item_ids, item_id, "item");
    if (!agent_id.is_string())
      throw Error(ErrorCode::SchemaError, "assigned values must be agent ids");
    owner_of[item] = index_of(inst.agent_ids, agent_id.get<std::string>(), "agent");
  }
  if (require_all)
    for (size_t i = 0; i < owner_of.size(); ++i)
      if (owner_of[i] == Instance::kOpen)
        throw Error(ErrorCode::SchemaError, "item '" + inst.item_ids[i] + "' is unassigned");
  return owner_of;
}

Query parse_query(const json& j, const std::vector<std::string>& agent_ids) {
  const json& variant = require_key(j, "variant");
  if (!variant.is_string()) throw Error(ErrorCode::SchemaError, "variant must be a string");
  const std::string name = variant.get<std::string>();
  if (name == "EFAE") {
    reject_unknown_keys(j, {"variant"});
    return Query::efae();
  }
  if (name == "REFAE") {
    reject_unknown_keys(j, {"variant", "recipients"});
    std::vector<int> recipients;
    for (const std::string& id : string_list(require_key(j, "recipients"), "recipients"))
      recipients.push_back(index_of(agent_ids, id, "agent"));
    std::sort(recipients.begin(), recipients.end());
    if (std::adjacent_find(recipients.begin(), recipients.end()) != recipients.end())
      throw Error(ErrorCode::SchemaError, "duplicate recipient");
    return Query::refae(std::move(recipients));
  }
  if (name == "FEFAE") {
    reject_unknown_keys(j, {"variant", "p"});
    return Query::fefae(static_cast<int>(integer_value(require_key(j, "p"), "p")));
  }
  throw Error(ErrorCode::SchemaError, "unknown variant '" + name + "'");
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, "document must be an object");
  reject_unknown_keys(j, {"agents", "items", "valuations", "assigned", "query"});

  Instance inst;
  inst.agent_ids = string_list(require_key(j, "agents"), "agents");
  inst.item_ids = string_list(require_key(j, "items"), "items");

  const json& rows = require_key(j, "valuations");
  if (!rows.is_array()) throw Error(ErrorCode::SchemaError, "valuations must be a matrix");
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorCode::SchemaError, "valuations must be a matrix");
    std::vector<Value> values;
    for (const auto& cell : row) values.push_back(integer_value(cell, "valuation"));
    inst.valuations.push_back(std::move(values));
  }

  inst.owner_of = assigned_map(require_key(j, "assigned"), inst, /*require_all=*/false);
  inst.query = parse_query(require_key(j, "query"), inst.agent_ids);

  try {
    return validate_instance(std::move(inst));
  } catch (const Error& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  json j;
  j["agents"] = inst.agent_ids;
  j["items"] = inst.item_ids;
  j["valuations"] = inst.valuations;
  json assigned = json::object();
  for (int i = 0; i < inst.m(); ++i)
    if (inst.owner_of[i] != Instance::kOpen)
      assigned[inst.item_ids[i]] = inst.agent_ids[inst.owner_of[i]];
  j["assigned"] = std::move(assigned);
  json query;
  query["variant"] = to_string(inst.query.variant);
  if (inst.query.variant == Query::Variant::Refae) {
    std::vector<std::string> ids;
    for (int r : inst.query.recipients) ids.push_back(inst.agent_ids[r]);
    query["recipients"] = std::move(ids);
  } else if (inst.query.variant == Query::Variant::Fefae) {
    query["p"] = inst.query.p;
  }
  j["query"] = std::move(query);
  return j.dump();
}

Allocation parse_allocation(const std::string& text, const Instance& inst) {
  const json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, "document must be an object");
  reject_unknown_keys(j, {"assigned"});
  return Allocation{assigned_map(require_key(j, "assigned"), inst, /*require_all=*/true)};
}

std::string serialize_allocation(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.owner_of.size()) != inst.m())
    throw Error(ErrorCode::SchemaError, "allocation size does not match the instance");
  json assigned = json::object();
  for (int i = 0; i < inst.m(); ++i) {
    if (alloc.owner_of[i] < 0 || alloc.owner_of[i] >= inst.n())
      throw Error(ErrorCode::SchemaError, "allocation leaves an item unassigned");
    assigned[inst.item_ids[i]] = inst.agent_ids[alloc.owner_of[i]];
  }
  json j;
  j["assigned"] = std::move(assigned);
  return j.dump();
}

namespace {

int open_item_type_count(const Instance& inst) {
  std::set<std::vector<Value>> columns;
  for (int item : inst.open_items()) {
    std::vector<Value> column;
    for (int a = 0; a < inst.n(); ++a) column.push_back(inst.value(a, item));
    columns.insert(std::move(column));
  }
  return static_cast<int>(columns.size());
}

Value total_value(const Instance& inst) {
  Value total = 0;
  for (int item = 0; item < inst.m(); ++item) {
    Value best = 0;
    for (int a = 0; a < inst.n(); ++a) best = std::max(best, inst.value(a, item));
    if (total > kValueSumLimit - best) return kValueSumLimit;  // saturate, only fed to a guard
    total += best;
  }
  return total;
}

}  // namespace

EngineChoice select_algorithm(const Instance& inst) {
  if (inst.query.variant == Query::Variant::Efae) {
    const int k = inst.open_count();
    const int n_t = compute_types(inst).agent_type_count();
    const long double bound = fpt_branch_bound(k, inst.n(), n_t);
    std::string sizes = "k=" + std::to_string(k) + ", n_t=" + std::to_string(n_t);
    if (bound <= 1e9L)
      return {"fpt-k-nt", "EFAE with " + sizes + ": branching bound within budget"};
    return {"brute", "EFAE with " + sizes + ": branching bound too large"};
  }

  const int p = inst.query.variant == Query::Variant::Refae
                    ? static_cast<int>(inst.query.recipients.size())
                    : inst.query.p;
  const int m_t = open_item_type_count(inst);
  if (p * m_t <= 12)
    return {"ilp-p-mt", "p=" + std::to_string(p) + ", open item types=" + std::to_string(m_t) +
                            ": count model has " + std::to_string(p * m_t) + " variables"};
  const Value total = total_value(inst);
  if (total <= DpOptions{}.total_value_guard)
    return {"dp-p-nt", "p=" + std::to_string(p) + ", total value " + std::to_string(total) +
                           ": value table fits"};
  return {"brute", "too many open item types for the count model and values too large for "
                   "the table"};
}

SolveOutcome run_engine(const Instance& inst, const std::string& engine,
                        std::optional<std::chrono::steady_clock::time_point> deadline) {
  if (engine == "auto") return run_engine(inst, select_algorithm(inst).engine, deadline);
  if (engine == "brute") {
    OracleOptions opts;
    opts.deadline = deadline;
    return solve_bruteforce(inst, opts);
  }
  if (engine == "fpt-k-nt") {
    FptOptions opts;
    opts.deadline = deadline;
    return solve_fpt_k_nt(inst, opts);
  }
  if (engine == "dp-p-nt") {
    DpOptions opts;
    opts.deadline = deadline;
    return solve_dp_p_nt(inst, opts);
  }
  if (engine == "ilp-p-mt") {
    IlpRecipientOptions opts;
    opts.limits.deadline = deadline;
    if (inst.query.variant == Query::Variant::Fefae) return solve_fefae_ilp(inst, opts);
    return solve_refae_ilp(inst, opts);
  }
  if (engine == "noop") {
    // Deliberately wrong engine (always answers No); lets the benchmark
    // harness's disagreement detection be exercised end to end.
    SolveOutcome out;
    out.answer = Answer::No;
    return out;
  }
  throw Error(ErrorCode::BadParams, "unknown engine '" + engine + "'");
}

namespace {

// Bounded draw driven directly by the engine so results are identical across
// platforms (std::uniform_int_distribution is not portable).
int draw(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % bound); }

// Surjective map onto {0..types-1}: one forced preimage per type, the rest
// free, then shuffled.
std::vector<int> type_map(std::mt19937_64& rng, int count, int types) {
  std::vector<int> map(count);
  for (int i = 0; i < count; ++i) map[i] = i < types ? i : draw(rng, types);
  for (int i = count - 1; i > 0; --i) std::swap(map[i], map[draw(rng, i + 1)]);
  return map;
}

}  // namespace

Instance gen_random(const GenSpec& spec) {
  if (spec.n < 1 || spec.m < 1 || spec.n_t < 1 || spec.m_t < 1 || spec.n_t > spec.n ||
      spec.m_t > spec.m || spec.vmax < 0 || spec.vmax > 1'000'000'000 ||
      spec.open_fraction < 0.0 || spec.open_fraction > 1.0)
    throw Error(ErrorCode::BadParams, "invalid generator parameters");

  std::mt19937_64 rng(spec.seed);
  std::vector<std::vector<Value>> base;
  for (int attempt = 0;; ++attempt) {
    if (attempt >= 1000)
      throw Error(ErrorCode::GenRetryExhausted,
                  "could not draw distinct type rows and columns");
    base.assign(spec.n_t, std::vector<Value>(spec.m_t));
    for (auto& row : base)
      for (Value& cell : row) cell = draw(rng, static_cast<int>(spec.vmax) + 1);
    std::set<std::vector<Value>> rows(base.begin(), base.end());
    std::set<std::vector<Value>> cols;
    for (int t = 0; t < spec.m_t; ++t) {
      std::vector<Value> col;
      for (const auto& row : base) col.push_back(row[t]);
      cols.insert(std::move(col));
    }
    if (static_cast<int>(rows.size()) == spec.n_t && static_cast<int>(cols.size()) == spec.m_t)
      break;
  }

  const std::vector<int> row_type = type_map(rng, spec.n, spec.n_t);
  const std::vector<int> col_type = type_map(rng, spec.m, spec.m_t);

  Instance inst;
  for (int a = 0; a < spec.n; ++a) inst.agent_ids.push_back("a" + std::to_string(a + 1));
  for (int i = 0; i < spec.m; ++i) inst.item_ids.push_back("g" + std::to_string(i + 1));
  inst.valuations.assign(spec.n, std::vector<Value>(spec.m));
  for (int a = 0; a < spec.n; ++a)
    for (int i = 0; i < spec.m; ++i) inst.valuations[a][i] = base[row_type[a]][col_type[i]];

  const int open = std::min<int>(
      spec.m, static_cast<int>(std::llround(spec.open_fraction * spec.m)));
  std::vector<int> order(spec.m);
  for (int i = 0; i < spec.m; ++i) order[i] = i;
  for (int i = spec.m - 1; i > 0; --i) std::swap(order[i], order[draw(rng, i + 1)]);
  inst.owner_of.assign(spec.m, Instance::kOpen);
  for (int pos = open; pos < spec.m; ++pos) inst.owner_of[order[pos]] = draw(rng, spec.n);

  switch (spec.variant) {
    case Query::Variant::Efae:
      inst.query = Query::efae();
      break;
    case Query::Variant::Refae: {
      std::vector<int> recipients;
      for (int a = 0; a < spec.n; ++a)
        if (draw(rng, 2) == 1) recipients.push_back(a);
      if (recipients.empty()) recipients.push_back(draw(rng, spec.n));
      inst.query = Query::refae(std::move(recipients));
      break;
    }
    case Query::Variant::Fefae:
      inst.query = Query::fefae(1 + draw(rng, spec.n));
      break;
  }
  return validate_instance(std::move(inst));
}

namespace {

std::vector<std::string> default_engines(const Instance& inst) {
  if (inst.query.variant == Query::Variant::Efae) return {"brute", "fpt-k-nt"};
  return {"brute", "dp-p-nt", "ilp-p-mt"};
}

std::string csv_row(const std::string& path, const std::string& engine,
                    const std::string& answer, const std::string& millis,
                    const std::string& nodes) {
  return path + "," + engine + "," + answer + "," + millis + "," + nodes + "\n";
}

}  // namespace

BenchReport run_bench(const std::string& dir, const std::vector<std::string>& engines,
                      int timeout_ms) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());

  BenchReport report;
  report.csv = "path,engine,answer,millis,nodes\n";
  for (const std::string& path : paths) {
    Instance inst;
    try {
      std::ifstream in(path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      inst = parse_instance(buffer.str());
    } catch (const Error& e) {
      report.csv += csv_row(path, "parse", std::string("ERROR:") + to_string(e.code()), "0", "0");
      continue;
    }

    const std::vector<std::string> chosen = engines.empty() ? default_engines(inst) : engines;
    std::vector<Answer> answers;
    for (const std::string& engine : chosen) {
      std::optional<std::chrono::steady_clock::time_point> deadline;
      if (timeout_ms > 0)
        deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
      const auto started = std::chrono::steady_clock::now();
      try {
        const SolveOutcome outcome = run_engine(inst, engine, deadline);
        const auto elapsed = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        report.csv += csv_row(path, engine, to_string(outcome.answer),
                              std::to_string(static_cast<long long>(elapsed)),
                              std::to_string(outcome.stats.nodes));
        if (outcome.answer != Answer::ResourceLimit) answers.push_back(outcome.answer);
      } catch (const Error& e) {
        report.csv += csv_row(path, engine, std::string("ERROR:") + to_string(e.code()), "0", "0");
      }
    }
    const bool mixed = std::any_of(answers.begin(), answers.end(),
                                   [&](Answer a) { return a != answers.front(); });
    if (mixed) {
      report.csv += csv_row(path, "DISAGREEMENT", "", "", "");
      report.disagreement = true;
    }
  }
  return report;
}

}  // namespace efae
