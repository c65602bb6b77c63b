#pragma once

// Winning-guarantee bidding policy. P1 tracks an upper bound B on P2's
// budget and bids r* x B where r* equalizes the budget P1 needs after
// winning and after losing the turn.

#include <memory>
#include <optional>

#include "mbc/contest.hpp"
#include "mbc/matrix.hpp"

namespace mbc {

/// r* at countdown (i, j), as a fraction of P2's current budget.
/// Diagonal Set01 states and Fixed1 column j = 1 return 1 (bid all of B).
template <ContestNumber Num>
Num optimal_bid_fraction(const CountdownMatrix<Num>& matrix, int i, int j);

/// Convenience overload that builds a matrix of size max(i, j).
template <ContestNumber Num>
Num optimal_bid_fraction(const AuctionVariant& variant, int i, int j);

/// Budget P1 needs (as a multiple of B) after bidding r* and winning,
/// and after bidding r* and losing to a bid just above it.
template <ContestNumber Num>
struct BranchRequirements {
  Num bid_fraction;
  Num win;
  Num lose;
};

/// Only for states where the indifference rule applies: Set01 with i < j,
/// Fixed1 with j >= 2.
template <ContestNumber Num>
BranchRequirements<Num> branch_requirements(const CountdownMatrix<Num>& matrix, int i, int j);

template <ContestNumber Num>
struct StrategyState {
  Num tracked_budget{};
  CountdownPair countdown;
  std::shared_ptr<const CountdownMatrix<Num>> matrix;

  /// Fresh T-turn game; the matrix must be at least ceil(T/2) wide.
  static StrategyState start(std::shared_ptr<const CountdownMatrix<Num>> matrix, int turns,
                             Num budget_p2);

  const AuctionVariant& variant() const { return matrix->variant(); }
  bool decided() const { return countdown.i <= 0 || countdown.j <= 0; }
};

template <ContestNumber Num>
Num next_bid(const StrategyState<Num>& state, int turn_value);

/// Updates the countdown (value-1 turns only) and the tracked budget.
/// Without a disclosed bid the tracker assumes the worst case for P1:
/// P2 won with just over my_bid, or lost while bidding 0.
template <ContestNumber Num>
StrategyState<Num> observe_outcome(const StrategyState<Num>& state, int turn_value,
                                   const Num& my_bid, bool i_won,
                                   const std::optional<Num>& disclosed_opponent_bid);

}  // namespace mbc
