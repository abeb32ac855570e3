// Command-line surface for the semigroup commutator library: classify, the
// two-route commutator, series, the regular-semigroup decision procedure,
// triple conversion, Rees decomposition, lattice listing and the
// verification suite. Exit codes: 0 ok, 1 property violation, 2 invalid
// input.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semicomm/json_io.hpp"
#include "semicomm/semicomm.hpp"

using namespace semicomm;
using semicomm::io::Algebra;

namespace {

enum ExitCode { kOk = 0, kPropertyViolation = 1, kInvalidInput = 2 };

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct LoadedFile {
  std::string path;
  json content;
  std::string digest;
};

LoadedFile load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open file: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput("JSON parse error in " + path + ": " + e.what());
  }
  char hex[32];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return {path, std::move(j), hex};
}

int oracle_guard_from_env() {
  const char* env = std::getenv("REES_MAX_ORACLE");
  if (env == nullptr) {
    return kMaxOracleOrder;
  }
  int guard = std::atoi(env);
  if (guard <= 0) {
    return kMaxOracleOrder;
  }
  if (guard > kMaxOracleOrderOverride) {
    std::cerr << "warning: REES_MAX_ORACLE=" << guard << " clamped to "
              << kMaxOracleOrderOverride << "\n";
    return kMaxOracleOrderOverride;
  }
  if (guard > kMaxOracleOrder) {
    std::cerr << "warning: REES_MAX_ORACLE=" << guard
              << " raises the oracle guard beyond the default " << kMaxOracleOrder << "\n";
  }
  return guard;
}

// Common per-command state: input selection, output mode, report assembly.
struct CommandContext {
  std::string algebra_path;
  std::string builtin;
  bool pretty = false;
  bool strict_normalized = false;

  json inputs = json::array();
  std::optional<Algebra> algebra;

  void add_algebra_options(CLI::App* cmd) {
    cmd->add_option("file", algebra_path, "algebra JSON file");
    cmd->add_option("--builtin", builtin, "named instance (d3-paper, q8-paper)");
    cmd->add_flag("--pretty", pretty, "human-readable output");
    cmd->add_flag("--json", "machine output (default)");
    cmd->add_flag("--strict-normalized", strict_normalized,
                  "reject unnormalized sandwich matrices");
  }

  void load_algebra() {
    if (!builtin.empty()) {
      algebra = Algebra{builtin_instance(builtin)};
      inputs.push_back({{"builtin", builtin}});
      return;
    }
    if (algebra_path.empty()) {
      throw InvalidInput("no algebra given: pass a file or --builtin");
    }
    auto file = load_json_file(algebra_path);
    algebra = io::algebra_from_json(file.content, strict_normalized);
    if (algebra->kind() == "rees" && !algebra->rees_input_was_normalized) {
      std::cerr << "notice: sandwich matrix was normalized on load\n";
    }
    inputs.push_back({{"path", file.path}, {"digest", file.digest}});
  }

  Partition load_congruence(const std::string& path, const FiniteSemigroup& s) {
    auto file = load_json_file(path);
    auto in = io::congruence_from_json(file.content, s);
    if (in.closed_from_pairs) {
      std::cerr << "notice: pairs in " << path << " were closed to a congruence\n";
    }
    inputs.push_back({{"path", file.path}, {"digest", file.digest}});
    return in.partition;
  }
};

int emit(const CommandContext& ctx, const std::string& command, const json& result,
         const std::string& status, double ms, const std::string& pretty_text) {
  int code = status == "ok" ? kOk
                            : (status == "property_violation" ? kPropertyViolation
                                                              : kInvalidInput);
  if (ctx.pretty) {
    std::cout << pretty_text;
    if (!pretty_text.empty() && pretty_text.back() != '\n') {
      std::cout << '\n';
    }
    return code;
  }
  json report{{"command", command},
              {"inputs", ctx.inputs},
              {"result", result},
              {"timing_ms", ms},
              {"status", status}};
  std::cout << report.dump(2) << "\n";
  return code;
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

// ---- classify -------------------------------------------------------------

int run_classify(CommandContext& ctx) {
  Timer timer;
  ctx.load_algebra();
  const auto& s = ctx.algebra->flat();
  auto reg = is_regular(s);
  auto simple = is_simple(s);
  bool cs = simple.simple && is_completely_simple(s);
  auto greens = greens_relations(s);

  json result{{"kind", ctx.algebra->kind()},
              {"order", s.order()},
              {"regular", reg.regular},
              {"simple", simple.simple},
              {"completely_simple", cs},
              {"idempotents", static_cast<int>(idempotents(s).size())},
              {"r_classes", greens.r.num_blocks()},
              {"l_classes", greens.l.num_blocks()},
              {"h_classes", greens.h.num_blocks()}};
  if (!s.name().empty()) {
    result["name"] = s.name();
  }
  if (cs) {
    if (const auto* rs = ctx.algebra->rees()) {
      result["profile"] = {rs->i_size(), rs->group().order(), rs->lambda_size()};
    } else {
      auto dec = rees_decompose(s);
      result["profile"] = {dec.rs.i_size(), dec.rs.group().order(), dec.rs.lambda_size()};
    }
  }

  std::ostringstream pretty;
  pretty << "order               " << s.order() << "\n"
         << "regular             " << (reg.regular ? "yes" : "no") << "\n"
         << "simple              " << (simple.simple ? "yes" : "no") << "\n"
         << "completely simple   " << (cs ? "yes" : "no") << "\n"
         << "idempotents         " << idempotents(s).size() << "\n"
         << "R/L/H classes       " << greens.r.num_blocks() << "/" << greens.l.num_blocks()
         << "/" << greens.h.num_blocks() << "\n";
  if (result.contains("profile")) {
    pretty << "Rees profile        (" << result["profile"][0] << ", " << result["profile"][1]
           << ", " << result["profile"][2] << ")\n";
  }
  return emit(ctx, "classify", result, "ok", timer.ms(), pretty.str());
}

// ---- commutator -----------------------------------------------------------

int run_commutator(CommandContext& ctx, const std::string& rho_path,
                   const std::string& sigma_path, const std::string& method) {
  Timer timer;
  ctx.load_algebra();
  const auto& s = ctx.algebra->flat();
  auto rho = ctx.load_congruence(rho_path, s);
  auto sigma = ctx.load_congruence(sigma_path, s);
  int guard = oracle_guard_from_env();

  CommutatorMethod m = CommutatorMethod::automatic;
  if (method == "fast") {
    m = CommutatorMethod::fast;
  } else if (method == "oracle") {
    m = CommutatorMethod::oracle;
  } else if (method == "both") {
    m = CommutatorMethod::both;
  } else if (method != "auto") {
    throw InvalidInput("unknown method \"" + method + "\"");
  }

  try {
    Partition result = ctx.algebra->rees() != nullptr
                           ? commutator(*ctx.algebra->rees(), rho, sigma, m, guard)
                           : commutator(s, rho, sigma, m, guard);
    json out = io::partition_to_json(result);
    out["method"] = method;
    out["num_blocks"] = result.num_blocks();
    if (const auto* rs = ctx.algebra->rees()) {
      out["triple"] = io::triple_to_json(*rs, triple_of_congruence(*rs, result));
    }
    std::ostringstream pretty;
    pretty << "[rho, sigma] has " << result.num_blocks() << " blocks\n"
           << io::partition_to_json(result)["blocks"].dump() << "\n";
    return emit(ctx, "commutator", out, "ok", timer.ms(), pretty.str());
  } catch (const CommutatorMismatch& e) {
    json out{{"mismatch", true},
             {"fast", io::partition_to_json(e.fast_result)},
             {"oracle", io::partition_to_json(e.oracle_result)}};
    return emit(ctx, "commutator", out, "property_violation", timer.ms(),
                "MISMATCH between fast and oracle commutators\n");
  }
}

// ---- series / check-regular -------------------------------------------------

int run_series(CommandContext& ctx, const std::string& kind_name, const std::string& method,
               int max_k) {
  Timer timer;
  ctx.load_algebra();
  SeriesKind kind = kind_name == "nilpotent" ? SeriesKind::lower_central : SeriesKind::derived;
  SeriesMethod sm = SeriesMethod::automatic;
  if (method == "fast") {
    sm = SeriesMethod::fast;
  } else if (method == "oracle") {
    sm = SeriesMethod::oracle;
  } else if (method != "auto") {
    throw InvalidInput("unknown method \"" + method + "\"");
  }
  int guard = oracle_guard_from_env();

  SeriesTrace trace;
  const auto* rs = ctx.algebra->rees();
  if (rs != nullptr) {
    trace = commutator_series(*rs, kind, sm, guard, max_k);
  } else {
    trace = commutator_series(ctx.algebra->flat(), kind, sm, guard, max_k);
  }

  json entries = json::array();
  for (const auto& e : trace.entries) {
    json entry = io::partition_to_json(e);
    if (rs != nullptr) {
      entry["triple"] = io::triple_to_json(*rs, triple_of_congruence(*rs, e));
    }
    entries.push_back(std::move(entry));
  }
  json result{{"kind", kind_name},
              {"entries", entries},
              {"stabilized", trace.stabilized},
              {"degree", trace.degree ? json(*trace.degree) : json(nullptr)}};

  std::ostringstream pretty;
  pretty << kind_name << " series, " << trace.entries.size() << " entries\n";
  for (std::size_t k = 0; k < trace.entries.size(); ++k) {
    pretty << "  step " << k + 1 << ": " << trace.entries[k].num_blocks() << " blocks\n";
  }
  if (trace.degree) {
    pretty << "degree " << *trace.degree << "\n";
  } else if (trace.stabilized) {
    pretty << "stabilized above 0_S; degree absent\n";
  } else {
    pretty << "stopped at --max-k without stabilizing\n";
  }
  return emit(ctx, "series", result, "ok", timer.ms(), pretty.str());
}

int run_check_regular(CommandContext& ctx, const std::string& kind_name) {
  Timer timer;
  ctx.load_algebra();
  SeriesKind kind = kind_name == "nilpotent" ? SeriesKind::lower_central : SeriesKind::derived;
  auto check = regular_nilpotency_check(ctx.algebra->flat(), kind);

  const char* verdict = "";
  switch (check.verdict) {
    case RegularVerdict::not_simple: verdict = "not_simple"; break;
    case RegularVerdict::h_class_not_group: verdict = "h_class_not_group"; break;
    case RegularVerdict::group_degree_fails: verdict = "group_degree_fails"; break;
    case RegularVerdict::yes: verdict = "yes"; break;
  }
  json result{{"kind", kind_name}, {"verdict", verdict}};
  if (check.witness) {
    result["witness"] = *check.witness;
  }
  if (check.max_subgroup_order > 0) {
    result["max_subgroup_order"] = check.max_subgroup_order;
  }
  if (check.group_degree) {
    result["group_degree"] = *check.group_degree;
  }
  if (check.semigroup_degree) {
    result["semigroup_degree"] = *check.semigroup_degree;
  }
  if (check.degree_bounds) {
    result["degree_bounds"] = {check.degree_bounds->first, check.degree_bounds->second};
  }

  std::ostringstream pretty;
  pretty << "verdict: " << verdict << "\n";
  if (check.group_degree) {
    pretty << "maximal subgroup degree " << *check.group_degree << "\n";
  }
  if (check.semigroup_degree) {
    pretty << "semigroup degree " << *check.semigroup_degree << "\n";
  }
  return emit(ctx, "check-regular", result, "ok", timer.ms(), pretty.str());
}

// ---- triple / decompose / congruences ----------------------------------------

int run_triple(CommandContext& ctx, const std::string& from_path, const std::string& to_path) {
  Timer timer;
  ctx.load_algebra();
  const auto* rs = ctx.algebra->rees();
  if (rs == nullptr) {
    throw InvalidInput("the triple command needs a rees algebra");
  }
  if (from_path.empty() == to_path.empty()) {
    throw InvalidInput("pass exactly one of --from-congruence / --to-congruence");
  }
  json result;
  if (!from_path.empty()) {
    auto rho = ctx.load_congruence(from_path, rs->flattened());
    result = io::triple_to_json(*rs, triple_of_congruence(*rs, rho));
  } else {
    auto file = load_json_file(to_path);
    ctx.inputs.push_back({{"path", file.path}, {"digest", file.digest}});
    auto t = io::triple_from_json(file.content, *rs);
    result = io::partition_to_json(congruence_of_triple(*rs, t));
  }
  return emit(ctx, "triple", result, "ok", timer.ms(), result.dump(2) + "\n");
}

int run_decompose(CommandContext& ctx) {
  Timer timer;
  ctx.load_algebra();
  auto dec = rees_decompose(ctx.algebra->flat());
  json result{{"rees", io::rees_to_json(dec.rs)},
              {"iso", dec.rs.order() <= 256 ? json(dec.iso) : json(nullptr)},
              {"profile", {dec.rs.i_size(), dec.rs.group().order(), dec.rs.lambda_size()}}};
  std::ostringstream pretty;
  pretty << "profile (" << dec.rs.i_size() << ", " << dec.rs.group().order() << ", "
         << dec.rs.lambda_size() << ")\n";
  return emit(ctx, "decompose", result, "ok", timer.ms(), pretty.str());
}

int run_congruences(CommandContext& ctx, bool as_triples) {
  Timer timer;
  ctx.load_algebra();
  json items = json::array();
  const auto* rs = ctx.algebra->rees();
  if (rs != nullptr) {
    for (const auto& t : enumerate_triples(*rs)) {
      json item = io::partition_to_json(congruence_of_triple(*rs, t));
      if (as_triples) {
        item["triple"] = io::triple_to_json(*rs, t);
      }
      items.push_back(std::move(item));
    }
  } else {
    for (const auto& c : enumerate_congruences(ctx.algebra->flat())) {
      items.push_back(io::partition_to_json(c));
    }
  }
  std::ostringstream pretty;
  pretty << items.size() << " congruences\n";
  return emit(ctx, "congruences",
              json{{"count", items.size()}, {"congruences", items}}, "ok", timer.ms(),
              pretty.str());
}

// ---- verify -------------------------------------------------------------------

struct VerifyStats {
  long pairs = 0;
  long failures = 0;
  json first_failure;
  std::vector<std::string> lines;
};

void verify_instance(const std::string& label, const ReesMatrixSemigroup& rs,
                     VerifyStats& stats, int guard, std::mt19937_64& rng) {
  auto congs = congruences_via_triples(rs);
  long before = stats.failures;
  auto note_failure = [&](const std::string& what) {
    ++stats.failures;
    if (stats.first_failure.is_null()) {
      stats.first_failure = {{"instance", label}, {"property", what}};
    }
  };

  for (const auto& rho : congs) {
    for (const auto& sigma : congs) {
      ++stats.pairs;
      auto fast = commutator_fast(rs, rho, sigma);
      if (fast != commutator_bruteforce(rs.flattened(), rho, sigma, guard)) {
        note_failure("fast/oracle mismatch");
      }
      if (fast != commutator_fast(rs, sigma, rho)) {
        note_failure("symmetry");
      }
      // characterization: C(rho,sigma;delta) iff [rho,sigma] <= delta
      for (const auto& delta : congs) {
        bool c = centralizes_cs(rs, rho, sigma, delta, CsCheckerMode::c3_only, guard).holds;
        if (c != fast.leq(delta)) {
          note_failure("centralizer characterization");
        }
      }
      // join distributivity over pairs
      for (const auto& sigma2 : congs) {
        auto joined = congruence_join(rs.flattened(), sigma, sigma2);
        auto lhs = commutator_fast(rs, rho, joined);
        auto rhs = congruence_join(rs.flattened(), fast, commutator_fast(rs, rho, sigma2));
        if (lhs != rhs) {
          note_failure("join distributivity");
        }
      }
    }
  }
  for (int k : {2, 3}) {
    for (auto kind : {SeriesKind::lower_central, SeriesKind::derived}) {
      if (!series_projection(rs, k, kind).equal) {
        note_failure("series projection k=" + std::to_string(k));
      }
    }
  }
  // sampled agreement of the three centralizer checkers
  std::uniform_int_distribution<std::size_t> pick(0, congs.size() - 1);
  for (int t = 0; t < 10; ++t) {
    const auto& rho = congs[pick(rng)];
    const auto& sigma = congs[pick(rng)];
    const auto& delta = congs[pick(rng)];
    bool a = centralizes_general(rs.flattened(), rho, sigma, delta, guard).holds;
    bool b = centralizes_cs(rs, rho, sigma, delta, CsCheckerMode::c3_only, guard).holds;
    bool c = centralizes_cs(rs, rho, sigma, delta, CsCheckerMode::c3_split, guard).holds;
    if (a != b || a != c) {
      note_failure("checker disagreement");
    }
  }
  stats.lines.push_back(label + ": " + (stats.failures == before ? "pass" : "FAIL"));
}

int run_verify(CommandContext& ctx, const std::string& suite_name, std::uint64_t seed) {
  Timer timer;
  int guard = oracle_guard_from_env();
  VerifyStats stats;
  std::mt19937_64 rng(seed);

  if (!suite_name.empty()) {
    if (suite_name != "small") {
      throw InvalidInput("unknown suite \"" + suite_name + "\"");
    }
    ctx.inputs.push_back({{"suite", suite_name}});
    for (const auto& inst : small_suite()) {
      verify_instance(inst.label, inst.rs, stats, guard, rng);
    }
  } else {
    ctx.load_algebra();
    const auto* rs = ctx.algebra->rees();
    if (rs == nullptr) {
      throw InvalidInput("verify needs a rees algebra or --suite small");
    }
    verify_instance(ctx.algebra_path.empty() ? ctx.builtin : ctx.algebra_path, *rs, stats,
                    guard, rng);
  }

  json result{{"pairs", stats.pairs},
              {"failures", stats.failures},
              {"instances", stats.lines.size()}};
  if (!stats.first_failure.is_null()) {
    result["first_failure"] = stats.first_failure;
  }
  std::ostringstream pretty;
  for (const auto& line : stats.lines) {
    pretty << line << "\n";
  }
  pretty << stats.pairs << " commutator pairs checked, " << stats.failures << " failures\n";
  return emit(ctx, "verify", result, stats.failures == 0 ? "ok" : "property_violation",
              timer.ms(), pretty.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup commutators, linked triples and"
               " nilpotency/solvability decision procedures"};
  app.require_subcommand(1);

  CommandContext classify_ctx, comm_ctx, series_ctx, regular_ctx, triple_ctx, dec_ctx,
      congs_ctx, verify_ctx;

  auto* classify = app.add_subcommand("classify", "structural predicates and Rees profile");
  classify_ctx.add_algebra_options(classify);

  auto* comm = app.add_subcommand("commutator", "binary commutator of two congruences");
  comm_ctx.add_algebra_options(comm);
  std::string rho_path, sigma_path, method = "auto";
  comm->add_option("--rho", rho_path, "congruence JSON")->required();
  comm->add_option("--sigma", sigma_path, "congruence JSON")->required();
  comm->add_option("--method", method, "auto|fast|oracle|both");

  auto* series = app.add_subcommand("series", "nilpotency / solvability series");
  series_ctx.add_algebra_options(series);
  std::string series_kind, series_method = "auto";
  int max_k = 12;
  series->add_option("--kind", series_kind, "nilpotent|solvable")
      ->required()
      ->check(CLI::IsMember({"nilpotent", "solvable"}));
  series->add_option("--method", series_method, "auto|fast|oracle");
  series->add_option("--max-k", max_k, "series length cap (default 12)");

  auto* regular = app.add_subcommand("check-regular", "decision procedure for regular input");
  regular_ctx.add_algebra_options(regular);
  std::string regular_kind;
  regular->add_option("--kind", regular_kind, "nilpotent|solvable")
      ->required()
      ->check(CLI::IsMember({"nilpotent", "solvable"}));

  auto* triple = app.add_subcommand("triple", "convert congruence <-> linked triple");
  triple_ctx.add_algebra_options(triple);
  std::string from_path, to_path;
  triple->add_option("--from-congruence", from_path, "congruence JSON to convert");
  triple->add_option("--to-congruence", to_path, "triple JSON to convert");

  auto* decompose = app.add_subcommand("decompose", "Rees coordinates of the input");
  dec_ctx.add_algebra_options(decompose);

  auto* congruences = app.add_subcommand("congruences", "list the congruence lattice");
  congs_ctx.add_algebra_options(congruences);
  bool as_triples = false;
  congruences->add_flag("--triples", as_triples, "include linked triples");

  auto* verify = app.add_subcommand("verify", "two-route equivalence and property battery");
  verify_ctx.add_algebra_options(verify);
  std::string suite_name;
  std::uint64_t seed = kDefaultSeed;
  verify->add_option("--suite", suite_name, "named suite (small)");
  verify->add_option("--seed", seed, "seed for randomized suite generation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      return run_classify(classify_ctx);
    }
    if (comm->parsed()) {
      return run_commutator(comm_ctx, rho_path, sigma_path, method);
    }
    if (series->parsed()) {
      return run_series(series_ctx, series_kind, series_method, max_k);
    }
    if (regular->parsed()) {
      return run_check_regular(regular_ctx, regular_kind);
    }
    if (triple->parsed()) {
      return run_triple(triple_ctx, from_path, to_path);
    }
    if (decompose->parsed()) {
      return run_decompose(dec_ctx);
    }
    if (congruences->parsed()) {
      return run_congruences(congs_ctx, as_triples);
    }
    if (verify->parsed()) {
      return run_verify(verify_ctx, suite_name, seed);
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const SemicommError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
