#pragma once

// Exact min-max search over whole-unit bids. Each turn P2 picks the value
// (Set01 only), P1 bids, then P2 answers having seen P1's bid. Budgets and
// bids are counted in grid units; P2 outbids by exactly one unit.

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "mbc/contest.hpp"

namespace mbc {

struct OracleInstance {
  AuctionVariant variant;
  int turns = 1;
  std::int64_t b1 = 0;  // grid units
  std::int64_t b2 = 0;  // grid units
  Exact grid_unit = 1;  // currency per unit; only scales reported amounts
};

struct OracleOptions {
  std::uint64_t max_nodes = 100'000'000;
  /// P2 only considers losing with 0 or winning with P1's bid + 1 unit.
  /// Any other answer is dominated; false enumerates every P2 bid.
  bool prune_p2 = true;
};

class Oracle {
 public:
  Oracle(AuctionVariant variant, int turns, OracleOptions options = {});

  const AuctionVariant& variant() const { return variant_; }
  int turns() const { return turns_; }

  /// Budgets in `state` are grid units.
  bool p1_can_win(const GameState<std::int64_t>& state);

  /// P1 to bid on a turn whose value is already announced.
  bool p1_can_win_after_value(const GameState<std::int64_t>& state, int value);

  /// P2 to answer P1's bid on an announced turn.
  bool p1_can_win_after_bid(const GameState<std::int64_t>& state, int value,
                            std::int64_t p1_bid);

  std::uint64_t nodes_expanded() const { return nodes_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Key {
    int rem;
    int i;
    int j;
    std::int64_t a;
    std::int64_t b;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  // Budgets below are sub-units: grid units times the alpha denominator,
  // so alpha-charges stay integral.
  struct Node {
    int turn_index;
    int s1;
    int s2;
    std::int64_t a;
    std::int64_t b;
  };

  bool solve(const Node& node);
  bool p1_node(const Node& node, int value);
  bool p2_node(const Node& node, int value, std::int64_t x_units);
  Node child(const Node& node, int value, std::int64_t p1_units, std::int64_t p2_units) const;
  Node to_node(const GameState<std::int64_t>& state) const;
  std::optional<Player> decided(const Node& node) const;

  AuctionVariant variant_;
  int turns_;
  OracleOptions options_;
  std::int64_t alpha_num_ = 0;
  std::int64_t alpha_den_ = 1;
  std::uint64_t nodes_ = 0;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

/// Checks `state` against the instance (turn count, budgets no larger than
/// the initial ones, countdown derived from the scores) and runs the oracle.
bool p1_can_win(const OracleInstance& instance, const GameState<std::int64_t>& state,
                OracleOptions options = {});

enum class BudgetSearch { Linear, Bisection };

struct BudgetSearchOptions {
  /// Largest b1 tried, in grid units; default 4 * b2.
  std::optional<std::int64_t> ceiling;
  BudgetSearch mode = BudgetSearch::Linear;
  OracleOptions oracle;
};

struct OracleResult {
  std::int64_t b_star = 0;  // grid units
  double ratio = 0;         // b_star / b2
  std::uint64_t nodes_expanded = 0;
};

/// Smallest b1 (grid units) that wins against b2 units. Throws
/// BudgetSearchExceeded when the ceiling or the node budget is hit.
OracleResult min_winning_budget(const AuctionVariant& variant, int turns, std::int64_t b2,
                                const BudgetSearchOptions& options = {});

class BudgetSearchExceeded : public ResourceError {
 public:
  BudgetSearchExceeded(const std::string& what, std::uint64_t nodes, std::int64_t lower,
                       std::optional<std::int64_t> upper)
      : ResourceError(what, nodes), lower_(lower), upper_(upper) {}
  /// Every b1 below this loses.
  std::int64_t lower_bound() const { return lower_; }
  std::optional<std::int64_t> upper_bound() const { return upper_; }

 private:
  std::int64_t lower_;
  std::optional<std::int64_t> upper_;
};

}  // namespace mbc
