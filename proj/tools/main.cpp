// Command-line surface for the stable committee selection library.
//
// Subcommands:
//   generate  instance families (cyclic / grid / seeded random)
//   verify    brute-force stability check of a committee or lottery
//   solve     lottery (multiplicative weights), committee (iterated
//             rounding), or exact-game solving, always self-verified
//   bench     CSV benchmark tables (lower bounds, small budgets, rounding)
//
// Machine-readable JSON goes to stdout, human summaries to stderr.
// Exit codes: 0 success/stable, 1 verified-unstable, 2 usage/input error,
// 3 solver failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stabsel/generators.hpp"
#include "stabsel/json_io.hpp"
#include "stabsel/lottery_solver.hpp"
#include "stabsel/rounding.hpp"
#include "stabsel/small_k.hpp"
#include "stabsel/stability.hpp"

namespace {

using stabsel::json;

constexpr int kExitStable = 0;
constexpr int kExitUnstable = 1;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("cannot parse " + path + ": " + e.what());
  }
}

stabsel::Instance load_instance(const std::string& path) {
  return stabsel::instance_from_json(parse_file(path));
}

stabsel::Committee parse_committee(const std::string& text) {
  std::string clean;
  for (char ch : text)
    if (ch != '{' && ch != '}' && ch != ' ' && ch != '\t') clean += ch;
  std::vector<int> members;
  std::stringstream ss(clean);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty())
      throw std::invalid_argument("empty entry in committee list \"" + text +
                                  "\"");
    try {
      std::size_t used = 0;
      const int id = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      members.push_back(id);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad candidate id \"" + token +
                                  "\" in committee list");
    }
  }
  return stabsel::Committee(std::move(members));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char ch : raw) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string csv_num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string family;
  int m = 0;
  int n = 0;
  double K = 0.0;
  double eps = 0.2;
  int r = 0;
  int ell = 0;
  std::string kind = "approval";
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

stabsel::ModelKind parse_kind(const std::string& kind) {
  if (kind == "approval") return stabsel::ModelKind::Approval;
  if (kind == "ranking") return stabsel::ModelKind::Ranking;
  if (kind == "budget") return stabsel::ModelKind::Budget;
  if (kind == "facility") return stabsel::ModelKind::Facility;
  throw std::invalid_argument("unknown model kind \"" + kind + "\"");
}

int cmd_generate(const GenerateArgs& args) {
  try {
    stabsel::Instance inst = [&] {
      if (args.family == "cyclic") return stabsel::gen_cyclic(args.m, args.eps);
      if (args.family == "grid")
        return stabsel::gen_ranking_grid(args.r, args.ell);
      stabsel::RandomParams params;
      params.density = args.density;
      return stabsel::gen_random(parse_kind(args.kind), args.m, args.n, args.K,
                                 params, args.seed);
    }();

    const json j = stabsel::instance_to_json(inst);
    if (!args.out.empty()) {
      std::ofstream out(args.out);
      if (!out) throw std::invalid_argument("cannot write file: " + args.out);
      out << j.dump(2) << "\n";
    }
    emit(j);
    std::cerr << "generated " << args.family << " instance: m=" << inst.m()
              << " n=" << inst.n() << " K=" << inst.limit() << "\n";
    return kExitStable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string instance;
  std::optional<std::string> committee;
  std::optional<std::string> lottery;
  double c = 1.0;
  int L = 0;  // 0 = exhaustive
};

int cmd_verify(const VerifyArgs& args) {
  try {
    if (args.committee.has_value() == args.lottery.has_value())
      throw std::invalid_argument(
          "pass exactly one of --committee or --lottery");
    const stabsel::Instance inst = load_instance(args.instance);
    const stabsel::EnumerationBound bound =
        args.L > 0 ? stabsel::EnumerationBound(stabsel::UpToSize{args.L})
                   : stabsel::EnumerationBound(stabsel::AllCommittees{});

    stabsel::StabilityReport report;
    if (args.committee) {
      report = stabsel::verify_committee(inst, parse_committee(*args.committee),
                                         args.c, bound);
    } else {
      const stabsel::Lottery lot =
          stabsel::lottery_from_json(parse_file(*args.lottery));
      report = stabsel::verify_lottery(inst, lot, args.c, bound);
    }

    emit(stabsel::report_to_json(report));
    std::cerr << (report.stable ? "stable" : "NOT stable") << " at c=" << args.c
              << "; worst ratio " << report.worst_ratio << "\n";
    return report.stable ? kExitStable : kExitUnstable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

// ------------------------------------------------------------------- solve

struct SolveArgs {
  std::string instance;
  std::string mode;
  int L = 1;
  double eps = 0.1;
  double alpha = 0.5;
  double beta = 0.25;
  double c = 1.0;
  std::uint64_t seed = 0;
  std::string trace;
};

int solve_lottery(const stabsel::Instance& inst, const SolveArgs& args) {
  stabsel::MwuOptions opt;
  opt.eps = args.eps;
  opt.L = args.L;
  opt.seed = args.seed;
  const stabsel::MwuResult res =
      stabsel::mwu_lottery(inst, stabsel::all_voters(inst), inst.limit(), opt);
  const stabsel::StabilityReport report = stabsel::verify_lottery(
      inst, res.lottery, 2.0 + args.eps, stabsel::UpToSize{args.L});

  json j;
  j["mode"] = "lottery";
  j["lottery"] = stabsel::lottery_to_json(res.lottery);
  j["report"] = stabsel::report_to_json(report);
  j["rounds"] = res.rounds;
  emit(j);
  std::cerr << "lottery with " << res.lottery.support.size()
            << " support committees; worst ratio " << report.worst_ratio
            << " against target " << 2.0 + args.eps << "\n";
  if (!report.stable) {
    std::cerr << "error: self-verification failed\n";
    return kExitSolver;
  }
  return kExitStable;
}

int solve_committee(const stabsel::Instance& inst, const SolveArgs& args) {
  stabsel::RoundingParams params;
  params.alpha = args.alpha;
  params.beta = args.beta;
  const stabsel::LotteryProvider provider =
      stabsel::mwu_provider(inst, args.eps, args.L, args.seed);
  const auto [committee, trace] =
      stabsel::iterated_rounding(inst, params, provider);

  if (!args.trace.empty()) {
    std::ofstream out(args.trace);
    if (!out) throw std::invalid_argument("cannot write file: " + args.trace);
    for (const stabsel::RoundRecord& rec : trace.rounds)
      out << stabsel::round_record_to_json(rec).dump() << "\n";
  }

  // Exhaustive self-verification when affordable, else the solver's own
  // attack-size bound.
  const stabsel::EnumerationBound bound =
      inst.m() <= 15 ? stabsel::EnumerationBound(stabsel::AllCommittees{})
                     : stabsel::EnumerationBound(stabsel::UpToSize{args.L});
  const double target = trace.theoretical_c();
  const stabsel::StabilityReport report =
      stabsel::verify_committee(inst, committee, target, bound);

  json j;
  j["mode"] = "committee";
  j["committee"] = committee.members();
  j["weight"] = inst.weight(committee);
  j["report"] = stabsel::report_to_json(report);
  j["theoretical_c"] = target;
  j["rounds"] = trace.rounds.size();
  emit(j);
  std::cerr << "committee " << committee.to_string() << " (weight "
            << inst.weight(committee) << "); worst ratio "
            << report.worst_ratio << " against guarantee " << target << "\n";
  if (!report.stable) {
    std::cerr << "error: rounded committee misses its guarantee\n";
    return kExitSolver;
  }
  return kExitStable;
}

int solve_exact_game(const stabsel::Instance& inst, const SolveArgs& args) {
  const stabsel::GameSolution sol =
      stabsel::exact_game(inst, args.c, stabsel::AllCommittees{});
  const stabsel::StabilityReport report = stabsel::verify_lottery(
      inst, sol.defender_lottery, args.c, stabsel::AllCommittees{});

  json j;
  j["mode"] = "exact-game";
  j["game"] = stabsel::game_solution_to_json(sol);
  j["report"] = stabsel::report_to_json(report);
  emit(j);
  std::cerr << "game value " << sol.value << " at c=" << args.c << " ("
            << (sol.value < 0 ? "stable lottery exists"
                              : "no stable lottery at this c")
            << ")\n";
  return report.stable ? kExitStable : kExitUnstable;
}

int cmd_solve(const SolveArgs& args) {
  stabsel::Instance inst = [&]() -> stabsel::Instance {
    try {
      return load_instance(args.instance);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      std::exit(kExitInput);
    }
  }();
  if (!args.trace.empty() && args.mode != "committee") {
    std::cerr << "error: --trace only applies to committee mode\n";
    return kExitInput;
  }
  try {
    if (args.mode == "lottery") return solve_lottery(inst, args);
    if (args.mode == "committee") return solve_committee(inst, args);
    return solve_exact_game(inst, args);
  } catch (const stabsel::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (best measured c "
              << e.measured_c << ")\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
  std::string suite;
  int seeds = 5;
  std::string out;
};

void bench_lowerbounds(std::vector<std::string>& rows) {
  using stabsel::AllCommittees;
  using stabsel::UpToSize;
  for (int m : {5, 10, 20}) {
    const stabsel::Instance inst = stabsel::gen_cyclic(m, 0.2);
    const bool exhaustive = m <= 10;
    const stabsel::EnumerationBound bound =
        exhaustive ? stabsel::EnumerationBound(AllCommittees{})
                   : stabsel::EnumerationBound(UpToSize{1});
    const auto [measured, witness] = stabsel::min_deterministic_c(inst, bound);
    const double formula = (m - 1.0) / m * inst.limit();
    rows.push_back(
        "lowerbounds,cyclic," + std::to_string(m) + ",0.2," +
        csv_num(inst.limit()) + "," + (exhaustive ? "all" : "L=1") + "," +
        csv_num(formula) + "," + csv_num(measured) + "," +
        csv_field(witness.to_string()) + "," +
        (std::abs(measured - formula) <= 1e-9 ? "yes" : "no"));
  }
  for (int rl : {3, 4, 5}) {
    const stabsel::Instance inst = stabsel::gen_ranking_grid(rl, rl);
    const auto [measured, witness] =
        stabsel::min_deterministic_c(inst, UpToSize{1});
    const double formula = (2.0 * rl - 1.0) * (rl - 1.0) / (rl * rl);
    rows.push_back("lowerbounds,grid," + std::to_string(rl) + "," +
                   std::to_string(rl) + "," + csv_num(inst.limit()) +
                   ",L=1," + csv_num(formula) + "," + csv_num(measured) + "," +
                   csv_field(witness.to_string()) + "," +
                   (std::abs(measured - formula) <= 1e-9 ? "yes" : "no"));
  }
}

void bench_smallk(std::vector<std::string>& rows, int seeds) {
  for (int K = 1; K <= 3; ++K) {
    for (int seed = 0; seed < seeds; ++seed) {
      const auto kind = seed % 2 == 0 ? stabsel::ModelKind::Approval
                                      : stabsel::ModelKind::Ranking;
      const int m = 3 + seed % 4;
      const int n = 3 + (seed / 2) % 4;
      const stabsel::Instance inst = stabsel::gen_random(
          kind, m, n, static_cast<double>(K), stabsel::RandomParams{},
          static_cast<std::uint64_t>(1000 * K + seed));
      const stabsel::GameSolution sol =
          stabsel::exact_game(inst, 1.0, stabsel::AllCommittees{});
      rows.push_back("smallk," + std::to_string(K) + "," +
                     std::to_string(seed) + "," +
                     (seed % 2 == 0 ? "approval" : "ranking") + "," +
                     std::to_string(m) + "," + std::to_string(n) + "," +
                     csv_num(sol.value) + "," +
                     (sol.value < -1e-7 ? "yes" : "no"));
    }
  }
}

void bench_rounding(std::vector<std::string>& rows, int seeds) {
  const char* kinds[] = {"approval", "ranking", "budget"};
  for (int seed = 0; seed < seeds; ++seed) {
    const int which = seed % 3;
    const auto kind = which == 0   ? stabsel::ModelKind::Approval
                      : which == 1 ? stabsel::ModelKind::Ranking
                                   : stabsel::ModelKind::Budget;
    const int m = 6 + seed % 3;
    const int n = 5 + seed % 4;
    const double K = 3.0;
    const stabsel::Instance inst = stabsel::gen_random(
        kind, m, n, K, stabsel::RandomParams{},
        static_cast<std::uint64_t>(7000 + seed));
    const auto [committee, trace] = stabsel::iterated_rounding(
        inst, stabsel::RoundingParams{}, stabsel::exact_game_provider(inst));
    const stabsel::StabilityReport report = stabsel::verify_committee(
        inst, committee, trace.theoretical_c(), stabsel::AllCommittees{});
    rows.push_back("rounding," + std::to_string(seed) + "," + kinds[which] +
                   "," + std::to_string(m) + "," + std::to_string(n) + "," +
                   csv_num(K) + "," + csv_num(report.worst_ratio) + "," +
                   csv_num(trace.theoretical_c()) + "," +
                   (report.stable ? "yes" : "no"));
  }
}

int cmd_bench(const BenchArgs& args) {
  try {
    std::string header;
    std::vector<std::string> rows;
    if (args.suite == "lowerbounds") {
      header = "suite,family,param_a,param_b,K,bound,formula_c,measured_c,"
               "witness,match";
      bench_lowerbounds(rows);
    } else if (args.suite == "smallk") {
      header = "suite,K,seed,kind,m,n,value,ok";
      bench_smallk(rows, args.seeds);
    } else {
      header = "suite,seed,kind,m,n,K,measured_c,theoretical_c,ok";
      bench_rounding(rows, args.seeds);
    }

    std::string csv = header + "\r\n";
    for (const std::string& row : rows) csv += row + "\r\n";
    if (!args.out.empty()) {
      std::ofstream out(args.out, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot write file: " + args.out);
      out << csv;
    } else {
      std::cout << csv;
    }
    std::cerr << "wrote " << rows.size() << " benchmark rows\n";
    return kExitStable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximately stable committee selection"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "emit an instance file");
  generate->add_option("--family", gen.family, "cyclic|grid|random")
      ->required()
      ->check(CLI::IsMember({"cyclic", "grid", "random"}));
  generate->add_option("--m", gen.m, "candidate count");
  generate->add_option("--n", gen.n, "voter count (random family)");
  generate->add_option("--K", gen.K, "weight budget (random family)");
  generate->add_option("--eps", gen.eps, "cyclic family epsilon");
  generate->add_option("--r", gen.r, "grid rows");
  generate->add_option("--ell", gen.ell, "grid columns");
  generate->add_option("--kind", gen.kind, "approval|ranking|budget|facility")
      ->check(CLI::IsMember({"approval", "ranking", "budget", "facility"}));
  generate->add_option("--density", gen.density, "approval density");
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_option("--out", gen.out, "also write the JSON to this file");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "check stability");
  verify->add_option("--instance", ver.instance, "instance JSON file")
      ->required();
  verify->add_option("--committee", ver.committee,
                     "comma-separated candidate ids");
  verify->add_option("--lottery", ver.lottery, "lottery JSON file");
  verify->add_option("--c", ver.c, "stability target");
  verify->add_option("--L", ver.L, "attack size bound (default exhaustive)");

  SolveArgs sol;
  CLI::App* solve = app.add_subcommand("solve", "compute a stable outcome");
  solve->add_option("--instance", sol.instance, "instance JSON file")
      ->required();
  solve->add_option("--mode", sol.mode, "lottery|committee|exact-game")
      ->required()
      ->check(CLI::IsMember({"lottery", "committee", "exact-game"}));
  solve->add_option("--L", sol.L, "attack size bound");
  solve->add_option("--eps", sol.eps, "lottery slack");
  solve->add_option("--alpha", sol.alpha, "budget split");
  solve->add_option("--beta", sol.beta, "coverage quantile");
  solve->add_option("--c", sol.c, "target for exact-game mode");
  solve->add_option("--seed", sol.seed, "random seed");
  solve->add_option("--trace", sol.trace,
                    "write per-round JSON lines (committee mode)");

  BenchArgs ben;
  CLI::App* bench = app.add_subcommand("bench", "emit benchmark CSV");
  bench->add_option("--suite", ben.suite, "lowerbounds|smallk|rounding")
      ->required()
      ->check(CLI::IsMember({"lowerbounds", "smallk", "rounding"}));
  bench->add_option("--seeds", ben.seeds, "seeded repetitions per row group");
  bench->add_option("--out", ben.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (*generate) return cmd_generate(gen);
  if (*verify) return cmd_verify(ver);
  if (*solve) return cmd_solve(sol);
  return cmd_bench(ben);
}
