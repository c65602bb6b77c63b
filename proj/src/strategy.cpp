#include "mbc/strategy.hpp"

#include <algorithm>

namespace mbc {

namespace {

bool bids_everything(const AuctionVariant& variant, int i, int j) {
  return variant.is_set01() ? i == j : j == 1;
}

}  // namespace

template <ContestNumber Num>
Num optimal_bid_fraction(const CountdownMatrix<Num>& matrix, int i, int j) {
  if (i <= 0 || j <= 0)
    throw GameDecidedError("countdown (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") is already decided");
  if (!matrix.defined(i, j))
    throw UnwinnableError("countdown (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") cannot be won");
  const AuctionVariant& variant = matrix.variant();
  if (bids_everything(variant, i, j)) return from_int<Num>(1);

  const Num& a = matrix.value(i, j - 1);
  const Num& b = matrix.value(i - 1, j);
  const Num one = from_int<Num>(1);
  if (!variant.is_all_pay()) return (a - b) / (one + a);
  return (a - b) / (a + (one - from_exact<Num>(variant.loser_rate())));
}

template <ContestNumber Num>
Num optimal_bid_fraction(const AuctionVariant& variant, int i, int j) {
  const int n = std::max({i, j, 1});
  return optimal_bid_fraction(build_matrix<Num>(variant, n), i, j);
}

template <ContestNumber Num>
BranchRequirements<Num> branch_requirements(const CountdownMatrix<Num>& matrix, int i, int j) {
  const AuctionVariant& variant = matrix.variant();
  if (i <= 0 || j <= 0 || !matrix.defined(i, j) || bids_everything(variant, i, j))
    throw DomainError("no indifference condition at (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")");
  const Num r = optimal_bid_fraction(matrix, i, j);
  const Num one = from_int<Num>(1);
  const Num alpha = from_exact<Num>(variant.loser_rate());
  Num win = r + matrix.value(i - 1, j);
  Num lose = alpha * r + (one - r) * matrix.value(i, j - 1);
  return BranchRequirements<Num>{r, std::move(win), std::move(lose)};
}

template <ContestNumber Num>
StrategyState<Num> StrategyState<Num>::start(std::shared_ptr<const CountdownMatrix<Num>> matrix,
                                             int turns, Num budget_p2) {
  if (!matrix) throw DomainError("strategy needs a countdown matrix");
  if (turns < 1) throw DomainError("turn count must be at least 1");
  const int n = ceil_half(turns);
  if (matrix->size() < n)
    throw DomainError("matrix of size " + std::to_string(matrix->size()) +
                      " too small for " + std::to_string(turns) + " turns");
  if (budget_p2 < 0) throw DomainError("opponent budget must be nonnegative");
  StrategyState s;
  s.tracked_budget = std::move(budget_p2);
  s.countdown = CountdownPair{n, n};
  s.matrix = std::move(matrix);
  return s;
}

template <ContestNumber Num>
Num next_bid(const StrategyState<Num>& state, int turn_value) {
  if (state.decided()) throw GameDecidedError("game already decided");
  if (turn_value != 0 && turn_value != 1) throw DomainError("turn value must be 0 or 1");
  if (!state.variant().is_set01() && turn_value != 1)
    throw DomainError("fixed-value contests only have value-1 turns");
  if (turn_value == 0) return from_int<Num>(0);
  const auto [i, j] = state.countdown;
  return optimal_bid_fraction(*state.matrix, i, j) * state.tracked_budget;
}

template <ContestNumber Num>
StrategyState<Num> observe_outcome(const StrategyState<Num>& state, int turn_value,
                                   const Num& my_bid, bool i_won,
                                   const std::optional<Num>& disclosed_opponent_bid) {
  StrategyState<Num> next = state;
  if (turn_value == 1) {
    if (i_won) {
      next.countdown.i -= 1;
    } else {
      next.countdown.j -= 1;
    }
  }
  if (i_won) {
    if (state.variant().is_all_pay() && disclosed_opponent_bid)
      next.tracked_budget -= from_exact<Num>(state.variant().loser_rate()) * *disclosed_opponent_bid;
  } else {
    next.tracked_budget -= disclosed_opponent_bid ? *disclosed_opponent_bid : my_bid;
  }
  if (next.tracked_budget < 0) next.tracked_budget = from_int<Num>(0);
  return next;
}

#define MBC_INSTANTIATE(Num)                                                                    \
  template Num optimal_bid_fraction<Num>(const CountdownMatrix<Num>&, int, int);                \
  template Num optimal_bid_fraction<Num>(const AuctionVariant&, int, int);                      \
  template BranchRequirements<Num> branch_requirements<Num>(const CountdownMatrix<Num>&, int,   \
                                                            int);                               \
  template struct StrategyState<Num>;                                                           \
  template Num next_bid<Num>(const StrategyState<Num>&, int);                                   \
  template StrategyState<Num> observe_outcome<Num>(const StrategyState<Num>&, int, const Num&,  \
                                                   bool, const std::optional<Num>&);

MBC_INSTANTIATE(Exact)
MBC_INSTANTIATE(double)

#undef MBC_INSTANTIATE

}  // namespace mbc
