#pragma once

// Game model for two-player budget-constrained multi-battle contests:
// variants, configuration, live state and the per-turn settlement rule.

#include <optional>
#include <string>
#include <string_view>

#include "mbc/errors.hpp"
#include "mbc/numeric.hpp"

namespace mbc {

enum class Pricing { FirstPrice, AllPay };

/// Fixed1: every turn is worth 1. Set01: the adversary picks 0 or 1 per turn.
enum class ValueModel { Fixed1, Set01 };

enum class Player { P1, P2 };

std::string_view to_string(Player p);

struct AuctionVariant {
  Pricing pricing = Pricing::FirstPrice;
  ValueModel values = ValueModel::Set01;
  /// All-pay ratio: share of a losing bid that is still charged. Ignored
  /// (treated as 0) for first-price.
  Exact alpha = 0;

  static AuctionVariant first_price(ValueModel values);
  static AuctionVariant all_pay(ValueModel values, Exact alpha = 1);

  bool is_set01() const { return values == ValueModel::Set01; }
  bool is_all_pay() const { return pricing == Pricing::AllPay; }

  /// Fraction of the losing bid that the loser of a turn pays.
  const Exact& loser_rate() const;

  /// Throws DomainError when alpha lies outside [0, 1].
  void validate() const;

  /// "fp-set", "fp-fixed", "ap-set" or "ap-fixed".
  std::string name() const;

  friend bool operator==(const AuctionVariant& a, const AuctionVariant& b) {
    return a.pricing == b.pricing && a.values == b.values && a.loser_rate() == b.loser_rate();
  }
};

/// Parses the CLI variant names. All-pay defaults to alpha = 1.
AuctionVariant parse_variant(std::string_view name, std::optional<Exact> alpha = std::nullopt);

struct GameConfig {
  AuctionVariant variant;
  int turns = 1;
  Exact budget_p2 = 1;
  /// Weight of leftover budget in the final score. Only 0 is supported.
  Exact score_budget_weight = 0;

  void validate() const;
};

/// Values each player still needs before the other one.
struct CountdownPair {
  int i = 0;
  int j = 0;
  friend bool operator==(const CountdownPair&, const CountdownPair&) = default;
};

/// Countdown for a game of `turns` turns after `turn_index` turns with the
/// given partial scores. Uses the largest combined score still reachable,
/// so value-0 turns shrink both countdowns.
CountdownPair countdown_for(int turns, int turn_index, int score_p1, int score_p2);

inline int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

// Also instantiated with std::int64_t grid units by the oracle.
template <class Num>
struct GameState {
  int turns = 1;
  Num budget_p1{};
  Num budget_p2{};
  int score_p1 = 0;
  int score_p2 = 0;
  int turn_index = 0;
  CountdownPair countdown;

  static GameState fresh(int turns, Num b1, Num b2) {
    GameState s;
    s.turns = turns;
    s.budget_p1 = std::move(b1);
    s.budget_p2 = std::move(b2);
    s.countdown = countdown_for(turns, 0, 0, 0);
    return s;
  }

  int remaining_turns() const { return turns - turn_index; }
};

/// Countdown win rule plus the final-score rule (ties go to P1).
template <class Num>
std::optional<Player> winner_if_decided(const GameState<Num>& state) {
  if (state.countdown.i <= 0) return Player::P1;
  if (state.countdown.j <= 0) return Player::P2;
  if (state.turn_index >= state.turns)
    return state.score_p1 >= state.score_p2 ? Player::P1 : Player::P2;
  return std::nullopt;
}

/// Resolves one turn. P1 wins ties. First-price: only the winner pays.
/// All-pay: the winner pays its bid and the loser alpha times its own.
template <ContestNumber Num>
GameState<Num> settle_turn(const GameState<Num>& state, const AuctionVariant& variant,
                           int value, const Num& bid_p1, const Num& bid_p2);

extern template GameState<Exact> settle_turn(const GameState<Exact>&, const AuctionVariant&, int,
                                             const Exact&, const Exact&);
extern template GameState<double> settle_turn(const GameState<double>&, const AuctionVariant&,
                                              int, const double&, const double&);

}  // namespace mbc
