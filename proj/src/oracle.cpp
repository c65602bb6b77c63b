#include "mbc/oracle.hpp"

#include <algorithm>
#include <string>

namespace mbc {

std::size_t Oracle::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(k.rem);
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(k.i));
  mix(static_cast<std::uint64_t>(k.j));
  mix(static_cast<std::uint64_t>(k.a));
  mix(static_cast<std::uint64_t>(k.b));
  return static_cast<std::size_t>(h);
}

Oracle::Oracle(AuctionVariant variant, int turns, OracleOptions options)
    : variant_(std::move(variant)), turns_(turns), options_(options) {
  variant_.validate();
  if (turns_ < 1) throw DomainError("turn count must be at least 1");
  const Exact& rate = variant_.loser_rate();
  alpha_num_ = boost::multiprecision::numerator(rate).convert_to<std::int64_t>();
  alpha_den_ = boost::multiprecision::denominator(rate).convert_to<std::int64_t>();
}

std::optional<Player> Oracle::decided(const Node& node) const {
  GameState<std::int64_t> view;
  view.turns = turns_;
  view.turn_index = node.turn_index;
  view.score_p1 = node.s1;
  view.score_p2 = node.s2;
  view.countdown = countdown_for(turns_, node.turn_index, node.s1, node.s2);
  return winner_if_decided(view);
}

Oracle::Node Oracle::child(const Node& node, int value, std::int64_t p1_units,
                           std::int64_t p2_units) const {
  // P1 wins ties.
  Node next = node;
  next.turn_index += 1;
  if (p1_units >= p2_units) {
    next.a -= p1_units * alpha_den_;
    next.b -= p2_units * alpha_num_;
    next.s1 += value;
  } else {
    next.a -= p1_units * alpha_num_;
    next.b -= p2_units * alpha_den_;
    next.s2 += value;
  }
  return next;
}

bool Oracle::solve(const Node& node) {
  if (auto w = decided(node)) return *w == Player::P1;
  const CountdownPair cd = countdown_for(turns_, node.turn_index, node.s1, node.s2);
  const Key key{turns_ - node.turn_index, cd.i, cd.j, node.a, node.b};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (++nodes_ > options_.max_nodes)
    throw ResourceError("oracle node budget of " + std::to_string(options_.max_nodes) +
                            " exceeded",
                        nodes_);

  bool p1_wins = p1_node(node, 1);
  if (p1_wins && variant_.is_set01()) p1_wins = p1_node(node, 0);
  memo_.emplace(key, p1_wins);
  return p1_wins;
}

bool Oracle::p1_node(const Node& node, int value) {
  for (std::int64_t x = node.a / alpha_den_; x >= 0; --x)
    if (p2_node(node, value, x)) return true;
  return false;
}

bool Oracle::p2_node(const Node& node, int value, std::int64_t x) {
  const std::int64_t p2_max = node.b / alpha_den_;
  if (options_.prune_p2) {
    if (!solve(child(node, value, x, 0))) return false;
    if (x + 1 <= p2_max && !solve(child(node, value, x, x + 1))) return false;
    return true;
  }
  for (std::int64_t y = 0; y <= p2_max; ++y)
    if (!solve(child(node, value, x, y))) return false;
  return true;
}

Oracle::Node Oracle::to_node(const GameState<std::int64_t>& state) const {
  if (state.budget_p1 < 0 || state.budget_p2 < 0)
    throw InconsistentStateError("budgets must be nonnegative");
  if (state.turns != turns_) throw InconsistentStateError("state has a different turn count");
  return Node{state.turn_index, state.score_p1, state.score_p2, state.budget_p1 * alpha_den_,
              state.budget_p2 * alpha_den_};
}

bool Oracle::p1_can_win(const GameState<std::int64_t>& state) { return solve(to_node(state)); }

bool Oracle::p1_can_win_after_value(const GameState<std::int64_t>& state, int value) {
  const Node node = to_node(state);
  if (auto w = decided(node)) return *w == Player::P1;
  if (value != 0 && value != 1) throw DomainError("turn value must be 0 or 1");
  if (!variant_.is_set01() && value != 1)
    throw DomainError("fixed-value contests only have value-1 turns");
  return p1_node(node, value);
}

bool Oracle::p1_can_win_after_bid(const GameState<std::int64_t>& state, int value,
                                  std::int64_t p1_bid) {
  const Node node = to_node(state);
  if (auto w = decided(node)) return *w == Player::P1;
  if (value != 0 && value != 1) throw DomainError("turn value must be 0 or 1");
  if (!variant_.is_set01() && value != 1)
    throw DomainError("fixed-value contests only have value-1 turns");
  if (p1_bid < 0 || p1_bid > state.budget_p1)
    throw OverbidError(1, "P1 bid outside remaining budget");
  return p2_node(node, value, p1_bid);
}

bool p1_can_win(const OracleInstance& instance, const GameState<std::int64_t>& state,
                OracleOptions options) {
  const int T = instance.turns;
  if (instance.b1 < 0 || instance.b2 < 0)
    throw InconsistentStateError("instance budgets must be nonnegative");
  if (instance.grid_unit <= 0) throw InconsistentStateError("grid unit must be positive");
  if (state.turns != T) throw InconsistentStateError("state has a different turn count");
  if (state.turn_index < 0 || state.turn_index > T)
    throw InconsistentStateError("turn index outside [0, T]");
  if (state.score_p1 < 0 || state.score_p2 < 0 ||
      state.score_p1 + state.score_p2 > state.turn_index)
    throw InconsistentStateError("scores exceed the number of turns played");
  if (!instance.variant.is_set01() && state.score_p1 + state.score_p2 != state.turn_index)
    throw InconsistentStateError("fixed-value scores must sum to the turns played");
  if (state.budget_p1 < 0 || state.budget_p1 > instance.b1 || state.budget_p2 < 0 ||
      state.budget_p2 > instance.b2)
    throw InconsistentStateError("budgets outside [0, initial budget]");
  if (state.countdown != countdown_for(T, state.turn_index, state.score_p1, state.score_p2))
    throw InconsistentStateError("countdown does not match the scores");
  Oracle oracle(instance.variant, T, options);
  return oracle.p1_can_win(state);
}

OracleResult min_winning_budget(const AuctionVariant& variant, int turns, std::int64_t b2,
                                const BudgetSearchOptions& options) {
  if (b2 <= 0) throw DomainError("b2 must be a positive number of grid units");
  const std::int64_t ceiling = options.ceiling.value_or(4 * b2);
  Oracle oracle(variant, turns, options.oracle);

  std::int64_t lower = 0;  // all b1 < lower are known to lose
  std::optional<std::int64_t> upper;
  auto wins = [&](std::int64_t b1) {
    try {
      return oracle.p1_can_win(GameState<std::int64_t>::fresh(turns, b1, b2));
    } catch (const ResourceError& e) {
      throw BudgetSearchExceeded(e.what(), oracle.nodes_expanded(), lower, upper);
    }
  };
  auto result = [&](std::int64_t b_star) {
    return OracleResult{b_star, static_cast<double>(b_star) / static_cast<double>(b2),
                        oracle.nodes_expanded()};
  };

  if (options.mode == BudgetSearch::Linear) {
    for (std::int64_t b1 = 0; b1 <= ceiling; ++b1) {
      if (wins(b1)) return result(b1);
      lower = b1 + 1;
    }
    throw BudgetSearchExceeded("no winning budget up to the ceiling of " +
                                   std::to_string(ceiling) + " units",
                               oracle.nodes_expanded(), lower, std::nullopt);
  }

  // Doubling then bisection; relies on winnability being monotone in b1.
  std::int64_t probe = 0;
  while (true) {
    if (probe > ceiling) {
      throw BudgetSearchExceeded("no winning budget up to the ceiling of " +
                                     std::to_string(ceiling) + " units",
                                 oracle.nodes_expanded(), lower, std::nullopt);
    }
    if (wins(probe)) {
      upper = probe;
      break;
    }
    lower = probe + 1;
    if (probe == ceiling) {
      probe = ceiling + 1;
    } else {
      probe = probe == 0 ? 1 : std::min(probe * 2, ceiling);
    }
  }
  while (lower < *upper) {
    const std::int64_t mid = lower + (*upper - lower) / 2;
    if (wins(mid)) {
      upper = mid;
    } else {
      lower = mid + 1;
    }
  }
  return result(*upper);
}

}  // namespace mbc
