// mbc: optimal budget ratios, countdown matrices, bids, the min-max oracle
// and contest simulation from the command line.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mbc/contest.hpp"
#include "mbc/matrix.hpp"
#include "mbc/oracle.hpp"
#include "mbc/simulator.hpp"
#include "mbc/strategy.hpp"

namespace {

using namespace mbc;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitResource = 2;
constexpr int kExitMismatch = 3;

struct VariantFlags {
  std::string variant;
  std::string alpha;

  AuctionVariant resolve() const {
    std::optional<Exact> a;
    if (!alpha.empty()) a = parse_exact(alpha);
    return parse_variant(variant, a);
  }
};

void add_variant_flags(CLI::App* cmd, VariantFlags& flags) {
  cmd->add_option("--variant", flags.variant, "fp-set, fp-fixed, ap-set or ap-fixed")
      ->required()
      ->check(CLI::IsMember({"fp-set", "fp-fixed", "ap-set", "ap-fixed"}));
  cmd->add_option("--alpha", flags.alpha, "all-pay ratio in [0,1] (default 1 for ap-*)");
}

template <class Num>
json json_number(const Num& x) {
  if constexpr (std::is_same_v<Num, Exact>) {
    return format_exact(x);
  } else {
    return x;
  }
}

template <class Num>
json json_ratio(const Ratio<Num>& r) {
  return r.is_unwinnable() ? json("inf") : json_number(r.value());
}

template <class Num>
int print_obr(const AuctionVariant& v, int turns, int handicap, const std::string& format) {
  const Ratio<Num> r = handicap > 0 ? handicap_obr<Num>(v, turns, handicap) : obr<Num>(v, turns);
  if (format == "json") {
    std::cout << json{{"variant", v.name()},
                      {"alpha", to_double(v.loser_rate())},
                      {"turns", turns},
                      {"handicap", handicap},
                      {"obr", json_ratio(r)}}
                     .dump()
              << '\n';
  } else {
    std::cout << r.to_string() << '\n';
  }
  return kExitOk;
}

template <class Num>
int print_matrix(const AuctionVariant& v, int n, const std::string& format) {
  const auto m = build_matrix<Num>(v, n);
  if (m.is_extension())
    std::cerr << "note: fixed-value all-pay with alpha " << format_exact(v.loser_rate())
              << " uses the extended indifference recurrence\n";
  std::cout << (format == "json" ? to_json(m) + "\n" : to_csv(m));
  return kExitOk;
}

template <class Num>
int print_bid(const AuctionVariant& v, int i, int j, const Exact& budget,
              const std::string& format) {
  const Num r = optimal_bid_fraction<Num>(v, i, j);
  const Num bid = r * from_exact<Num>(budget);
  if (format == "json") {
    std::cout << json{{"variant", v.name()},
                      {"i", i},
                      {"j", j},
                      {"r_star", json_number(r)},
                      {"bid", json_number(bid)}}
                     .dump()
              << '\n';
  } else {
    std::cout << "r* = " << format_number(r) << "\nbid = " << format_number(bid) << '\n';
  }
  return kExitOk;
}

std::int64_t to_units(const Exact& amount, const Exact& unit, const char* what) {
  const Exact units = amount / unit;
  if (boost::multiprecision::denominator(units) != 1 || units < 0)
    throw DomainError(std::string(what) + " must be a nonnegative multiple of the grid unit");
  return units.convert_to<std::int64_t>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal budget ratios for two-player budget-constrained multi-battle contests"};
  app.require_subcommand(1);

  // obr
  VariantFlags obr_v;
  int obr_turns = 0;
  int obr_handicap = 0;
  bool obr_exact = false;
  std::string obr_format = "text";
  auto* obr_cmd = app.add_subcommand("obr", "optimal budget ratio of a T-turn game");
  add_variant_flags(obr_cmd, obr_v);
  obr_cmd->add_option("--turns", obr_turns, "number of turns T")->required()->check(CLI::PositiveNumber);
  obr_cmd->add_option("--handicap", obr_handicap, "tolerated final deficit k")->check(CLI::NonNegativeNumber);
  obr_cmd->add_flag("--exact", obr_exact, "exact rational output");
  obr_cmd->add_option("--format", obr_format)->check(CLI::IsMember({"text", "json"}));

  // matrix
  VariantFlags mat_v;
  int mat_size = 0;
  bool mat_exact = false;
  std::string mat_format = "csv";
  auto* mat_cmd = app.add_subcommand("matrix", "dump an OBR countdown matrix");
  add_variant_flags(mat_cmd, mat_v);
  mat_cmd->add_option("--size", mat_size, "matrix size n")->required();
  mat_cmd->add_flag("--exact", mat_exact, "exact rational cells");
  mat_cmd->add_option("--format", mat_format)->check(CLI::IsMember({"csv", "json"}));

  // bid
  VariantFlags bid_v;
  int bid_i = 0;
  int bid_j = 0;
  std::string bid_budget = "1";
  bool bid_exact = false;
  std::string bid_format = "text";
  auto* bid_cmd = app.add_subcommand("bid", "optimal bid fraction and bid at a countdown state");
  add_variant_flags(bid_cmd, bid_v);
  bid_cmd->add_option("--i", bid_i, "P1 countdown")->required();
  bid_cmd->add_option("--j", bid_j, "P2 countdown")->required();
  bid_cmd->add_option("--opponent-budget", bid_budget, "tracked P2 budget B (default 1)");
  bid_cmd->add_flag("--exact", bid_exact, "exact rational output");
  bid_cmd->add_option("--format", bid_format)->check(CLI::IsMember({"text", "json"}));

  // oracle
  VariantFlags or_v;
  int or_turns = 0;
  std::string or_b2;
  std::string or_b1;
  std::string or_unit = "1";
  std::uint64_t or_max_nodes = 100'000'000;
  bool or_bisect = false;
  auto* or_cmd = app.add_subcommand("oracle", "exact min-max search over grid bids");
  add_variant_flags(or_cmd, or_v);
  or_cmd->add_option("--turns", or_turns)->required()->check(CLI::PositiveNumber);
  or_cmd->add_option("--b2", or_b2, "P2 budget")->required();
  or_cmd->add_option("--b1", or_b1, "P1 budget; answers win/lose instead of searching");
  or_cmd->add_option("--grid-unit", or_unit, "bid granularity (default 1)");
  or_cmd->add_option("--max-nodes", or_max_nodes, "node budget before giving up");
  or_cmd->add_flag("--bisect", or_bisect, "doubling + bisection instead of linear search");

  // simulate
  VariantFlags sim_v;
  int sim_turns = 0;
  std::string sim_ratio;
  std::string sim_b2 = "1";
  std::string sim_adversary;
  std::uint64_t sim_seed = 0;
  std::string sim_trace;
  int sim_games = 1;
  std::string sim_unit;
  std::string sim_eps;
  std::string sim_format = "text";
  auto* sim_cmd = app.add_subcommand("simulate", "play the guarantee strategy against an adversary");
  add_variant_flags(sim_cmd, sim_v);
  sim_cmd->add_option("--turns", sim_turns)->required()->check(CLI::PositiveNumber);
  sim_cmd->add_option("--ratio", sim_ratio, "b1 / b2")->required();
  sim_cmd->add_option("--b2", sim_b2, "P2 budget (default 1)");
  sim_cmd->add_option("--adversary", sim_adversary)
      ->required()
      ->check(CLI::IsMember({"omnipotent", "allin", "match", "random"}));
  sim_cmd->add_option("--seed", sim_seed);
  sim_cmd->add_option("--trace", sim_trace, "write traces as JSON lines to this path");
  sim_cmd->add_option("--games", sim_games, "number of games, seeds seed..seed+games-1")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--grid-unit", sim_unit, "omnipotent adversary grid (default b2/8)");
  sim_cmd->add_option("--epsilon", sim_eps, "match adversary margin (default b2/1000)");
  sim_cmd->add_option("--format", sim_format)->check(CLI::IsMember({"text", "json"}));

  // verify
  VariantFlags ver_v;
  int ver_size = 0;
  auto* ver_cmd = app.add_subcommand("verify", "check the DP against the closed form (exact)");
  add_variant_flags(ver_cmd, ver_v);
  ver_cmd->add_option("--size", ver_size, "matrix size n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (*obr_cmd) {
      const auto v = obr_v.resolve();
      return obr_exact ? print_obr<Exact>(v, obr_turns, obr_handicap, obr_format)
                       : print_obr<double>(v, obr_turns, obr_handicap, obr_format);
    }
    if (*mat_cmd) {
      const auto v = mat_v.resolve();
      return mat_exact ? print_matrix<Exact>(v, mat_size, mat_format)
                       : print_matrix<double>(v, mat_size, mat_format);
    }
    if (*bid_cmd) {
      const auto v = bid_v.resolve();
      const Exact budget = parse_exact(bid_budget);
      if (budget < 0) throw DomainError("opponent budget must be nonnegative");
      return bid_exact ? print_bid<Exact>(v, bid_i, bid_j, budget, bid_format)
                       : print_bid<double>(v, bid_i, bid_j, budget, bid_format);
    }
    if (*or_cmd) {
      const auto v = or_v.resolve();
      const Exact unit = parse_exact(or_unit);
      if (unit <= 0) throw DomainError("grid unit must be positive");
      const std::int64_t b2 = to_units(parse_exact(or_b2), unit, "--b2");
      OracleOptions oracle_options;
      oracle_options.max_nodes = or_max_nodes;
      if (!or_b1.empty()) {
        const std::int64_t b1 = to_units(parse_exact(or_b1), unit, "--b1");
        Oracle oracle(v, or_turns, oracle_options);
        const bool wins = oracle.p1_can_win(GameState<std::int64_t>::fresh(or_turns, b1, b2));
        std::cout << json{{"b1", b1}, {"b2", b2}, {"p1_can_win", wins},
                          {"nodes_expanded", oracle.nodes_expanded()}}
                         .dump()
                  << '\n';
        return kExitOk;
      }
      BudgetSearchOptions search;
      search.oracle = oracle_options;
      search.mode = or_bisect ? BudgetSearch::Bisection : BudgetSearch::Linear;
      try {
        const OracleResult r = min_winning_budget(v, or_turns, b2, search);
        std::cout << json{{"b_star", r.b_star},
                          {"ratio", r.ratio},
                          {"nodes_expanded", r.nodes_expanded}}
                         .dump()
                  << '\n';
      } catch (const BudgetSearchExceeded& e) {
        json partial{{"error", e.what()}, {"lower_bound", e.lower_bound()},
                     {"nodes_expanded", e.work()}};
        if (e.upper_bound()) partial["upper_bound"] = *e.upper_bound();
        std::cout << partial.dump() << '\n';
        return kExitResource;
      }
      return kExitOk;
    }
    if (*sim_cmd) {
      GameConfig config;
      config.variant = sim_v.resolve();
      config.turns = sim_turns;
      config.budget_p2 = parse_exact(sim_b2);
      config.validate();
      const Exact b1 = parse_exact(sim_ratio) * config.budget_p2;
      AdversaryPolicy adversary = AdversaryPolicy::of(parse_adversary(sim_adversary));
      if (!sim_unit.empty()) adversary.grid_unit = parse_exact(sim_unit);
      if (!sim_eps.empty()) adversary.epsilon = parse_exact(sim_eps);

      std::ofstream trace_file;
      if (!sim_trace.empty()) {
        trace_file.open(sim_trace);
        if (!trace_file) throw DomainError("cannot open trace file '" + sim_trace + "'");
      }
      int p1_wins = 0;
      for (int g = 0; g < sim_games; ++g) {
        const std::uint64_t seed = sim_seed + static_cast<std::uint64_t>(g);
        const GameTrace trace = run_game(config, b1, P1Policy::strategy(), adversary, seed);
        const std::string line = to_json_string(trace);
        if (trace_file.is_open()) trace_file << line << '\n';
        if (sim_format == "json") {
          std::cout << line << '\n';
        } else {
          const json j = to_json(trace);
          std::cout << "seed " << seed << ": winner " << to_string(trace.winner) << " ("
                    << j["reason"].get<std::string>() << ", " << trace.turns.size()
                    << " turns)\n";
        }
        if (trace.winner == Player::P1) ++p1_wins;
      }
      if (sim_games > 1 && sim_format != "json")
        std::cout << "P1 won " << p1_wins << " of " << sim_games << " games\n";
      return kExitOk;
    }
    if (*ver_cmd) {
      const auto v = ver_v.resolve();
      const VerifyReport report = verify_matrix(v, ver_size);
      if (report.ok) {
        std::cout << "ok: " << report.entries_checked << " entries checked\n";
        return kExitOk;
      }
      const auto& mm = *report.mismatch;
      std::cout << "mismatch at (" << mm.i << ", " << mm.j << "): dp " << mm.dp << " vs closed form "
                << mm.closed << " after " << report.entries_checked << " entries\n";
      return kExitMismatch;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitDomain;
}
