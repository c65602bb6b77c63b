#pragma once

// Plays full contests between P1 (the guarantee strategy or a script) and
// an adversary, and records every turn.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mbc/contest.hpp"

namespace mbc {

enum class AdversaryKind { OmnipotentBestResponse, AllIn, MatchPlusEpsilon, RandomSeeded };

AdversaryKind parse_adversary(std::string_view name);  // omnipotent|allin|match|random

struct AdversaryPolicy {
  AdversaryKind kind = AdversaryKind::AllIn;
  /// Omnipotent search grid; defaults to b2 / 8.
  std::optional<Exact> grid_unit;
  /// Margin used by MatchPlusEpsilon; defaults to b2 / 1000.
  std::optional<Exact> epsilon;
  /// Mixed with the per-game seed by RandomSeeded.
  std::uint64_t seed = 0;

  static AdversaryPolicy of(AdversaryKind kind) { return AdversaryPolicy{kind, {}, {}, 0}; }
};

struct P1Policy {
  enum class Kind { Strategy, Scripted };
  Kind kind = Kind::Strategy;
  /// Scripted: the bid for turn k is script[k] (0 past the end).
  std::vector<Exact> script;

  static P1Policy strategy() { return P1Policy{}; }
  static P1Policy scripted(std::vector<Exact> bids) {
    return P1Policy{Kind::Scripted, std::move(bids)};
  }
};

/// Interface the simulator drives on P2's side. Values are only requested
/// for Set01 contests.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual int choose_value(const GameState<Exact>& state) = 0;
  virtual Exact respond(const GameState<Exact>& state, int value, const Exact& p1_bid) = 0;
};

std::unique_ptr<Adversary> make_adversary(const AdversaryPolicy& policy, const GameConfig& config,
                                          std::uint64_t seed);

struct TurnRecord {
  int index = 0;
  int value = 0;
  Exact bid_p1;
  Exact bid_p2;
  Player winner = Player::P1;
  Exact budget_p1;  // after the turn
  Exact budget_p2;
  int score_p1 = 0;
  int score_p2 = 0;
};

enum class Termination { CountdownReached, TurnsExhausted, Fault };

struct Fault {
  Player player = Player::P1;
  int turn = 0;
  Exact bid;
};

struct GameTrace {
  GameConfig config;
  Exact b1;
  std::vector<TurnRecord> turns;
  Player winner = Player::P1;
  Termination reason = Termination::TurnsExhausted;
  std::optional<Fault> fault;
};

nlohmann::json to_json(const GameTrace& trace);
std::string to_json_string(const GameTrace& trace);

struct SimulationOptions {
  /// Reveal P2's bid to P1 after each turn.
  bool disclose_bids = true;
};

/// Deterministic in (config, b1, policies, seed). An overbid ends the game
/// with a fault and a loss for the offending player.
GameTrace run_game(const GameConfig& config, const Exact& b1, const P1Policy& p1,
                   const AdversaryPolicy& p2, std::uint64_t seed,
                   const SimulationOptions& options = {});

struct ExhaustiveOptions {
  std::uint64_t max_states = 20'000'000;
  bool disclose_bids = true;
};

struct ExhaustiveVerdict {
  bool win_all = false;
  std::optional<GameTrace> counterexample;
  std::uint64_t states_visited = 0;
  std::uint64_t leaves = 0;
  /// Turns where the strategy asked for more than P1 had left (the bid is
  /// clamped to the budget).
  std::uint64_t budget_shortfalls = 0;
};

/// Plays the strategy against every adversary line: each Set01 value and
/// every P2 bid of the form (p/q) * b2 with q <= denominator_bound, plus
/// P2's whole remaining budget.
ExhaustiveVerdict exhaustive_adversary_check(const GameConfig& config, const Exact& b1,
                                             int denominator_bound,
                                             const ExhaustiveOptions& options = {});

/// Sorted p/q in [0, 1] with 1 <= q <= bound.
std::vector<Exact> farey_fractions(int bound);

}  // namespace mbc
