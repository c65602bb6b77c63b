#include "mbc/simulator.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "mbc/matrix.hpp"
#include "mbc/oracle.hpp"
#include "mbc/strategy.hpp"

namespace mbc {

AdversaryKind parse_adversary(std::string_view name) {
  if (name == "omnipotent") return AdversaryKind::OmnipotentBestResponse;
  if (name == "allin") return AdversaryKind::AllIn;
  if (name == "match") return AdversaryKind::MatchPlusEpsilon;
  if (name == "random") return AdversaryKind::RandomSeeded;
  throw DomainError("unknown adversary '" + std::string(name) +
                    "' (expected omnipotent, allin, match or random)");
}

namespace {

class AllInAdversary final : public Adversary {
 public:
  int choose_value(const GameState<Exact>&) override { return 1; }
  Exact respond(const GameState<Exact>& s, int, const Exact&) override { return s.budget_p2; }
};

class MatchAdversary final : public Adversary {
 public:
  explicit MatchAdversary(Exact epsilon) : epsilon_(std::move(epsilon)) {}
  int choose_value(const GameState<Exact>&) override { return 1; }
  Exact respond(const GameState<Exact>& s, int value, const Exact& p1_bid) override {
    if (value == 0) return Exact(0);
    Exact bid = p1_bid + epsilon_;
    return bid <= s.budget_p2 ? bid : Exact(0);
  }

 private:
  Exact epsilon_;
};

/// Values are fair coin flips; bids are k/16 of the remaining budget with k
/// uniform in [0, 16]. Raw mt19937_64 output is mapped by rejection so the
/// stream is identical on every platform.
class RandomAdversary final : public Adversary {
 public:
  RandomAdversary(std::uint64_t policy_seed, std::uint64_t run_seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(run_seed), static_cast<std::uint32_t>(run_seed >> 32),
                      static_cast<std::uint32_t>(policy_seed),
                      static_cast<std::uint32_t>(policy_seed >> 32)};
    rng_.seed(seq);
  }
  int choose_value(const GameState<Exact>&) override { return static_cast<int>(rng_() >> 63); }
  Exact respond(const GameState<Exact>& s, int, const Exact&) override {
    return s.budget_p2 * make_exact(static_cast<std::int64_t>(below(17)), 16);
  }

 private:
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r = rng_();
    while (r >= limit) r = rng_();
    return r % n;
  }
  std::mt19937_64 rng_;
};

/// Best response by min-max search. Budgets are mapped onto the finest grid
/// that represents them exactly when that stays small; otherwise onto the
/// configured grid with P1 rounded down and P2 rounded up.
class OmnipotentAdversary final : public Adversary {
 public:
  static constexpr std::int64_t kMaxUnits = 64;

  OmnipotentAdversary(const GameConfig& config, Exact unit)
      : variant_(config.variant),
        unit_(std::move(unit)),
        oracle_(config.variant, config.turns, OracleOptions{20'000'000, true}) {
    if (unit_ <= 0) throw DomainError("grid unit must be positive");
  }

  int choose_value(const GameState<Exact>& s) override {
    const Grid g = discretize(s);
    for (int v : {1, 0})
      if (!oracle_.p1_can_win_after_value(g.state, v)) return v;
    return 1;
  }

  Exact respond(const GameState<Exact>& s, int value, const Exact& p1_bid) override {
    const Grid g = discretize(s);
    const Exact win_bid = (floor_exact(p1_bid / g.unit) + 1) * g.unit;
    const Exact zero(0);
    if (!p1_wins_after(s, value, p1_bid, zero)) return zero;
    if (win_bid <= s.budget_p2 && !p1_wins_after(s, value, p1_bid, win_bid)) return win_bid;
    return zero;
  }

 private:
  struct Grid {
    GameState<std::int64_t> state;
    Exact unit;
  };

  bool p1_wins_after(const GameState<Exact>& s, int value, const Exact& p1_bid,
                     const Exact& p2_bid) {
    const auto next = settle_turn(s, variant_, value, p1_bid, p2_bid);
    return oracle_.p1_can_win(discretize(next).state);
  }

  Grid discretize(const GameState<Exact>& s) const {
    Exact unit = unit_;
    if (s.budget_p1 > 0) unit = gcd_exact(unit, s.budget_p1);
    if (s.budget_p2 > 0) unit = gcd_exact(unit, s.budget_p2);
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (s.budget_p1 / unit <= kMaxUnits && s.budget_p2 / unit <= kMaxUnits) {
      a = (s.budget_p1 / unit).convert_to<std::int64_t>();
      b = (s.budget_p2 / unit).convert_to<std::int64_t>();
    } else {
      unit = unit_;
      a = floor_exact(s.budget_p1 / unit).convert_to<std::int64_t>();
      b = ceil_exact(s.budget_p2 / unit).convert_to<std::int64_t>();
    }
    GameState<std::int64_t> g;
    g.turns = s.turns;
    g.budget_p1 = a;
    g.budget_p2 = b;
    g.score_p1 = s.score_p1;
    g.score_p2 = s.score_p2;
    g.turn_index = s.turn_index;
    g.countdown = s.countdown;
    return Grid{g, unit};
  }

  AuctionVariant variant_;
  Exact unit_;
  Oracle oracle_;
};

/// P1 side of a simulated game.
class Bidder {
 public:
  Bidder(const GameConfig& config, const P1Policy& policy, bool disclose)
      : policy_(policy), disclose_(disclose) {
    if (policy.kind == P1Policy::Kind::Strategy) {
      auto matrix = std::make_shared<const CountdownMatrix<Exact>>(
          build_matrix<Exact>(config.variant, ceil_half(config.turns)));
      strategy_ = StrategyState<Exact>::start(std::move(matrix), config.turns, config.budget_p2);
    }
  }

  Exact bid(const GameState<Exact>& s, int value) const {
    if (!strategy_) {
      const auto k = static_cast<std::size_t>(s.turn_index);
      return k < policy_.script.size() ? policy_.script[k] : Exact(0);
    }
    if (strategy_->decided()) return Exact(0);
    return std::min(next_bid(*strategy_, value), s.budget_p1);
  }

  void observe(int value, const Exact& my_bid, bool won, const Exact& p2_bid) {
    if (!strategy_ || strategy_->decided()) return;
    std::optional<Exact> disclosed;
    if (disclose_) disclosed = p2_bid;
    strategy_ = observe_outcome(*strategy_, value, my_bid, won, disclosed);
  }

  const std::optional<StrategyState<Exact>>& strategy() const { return strategy_; }

 private:
  const P1Policy& policy_;
  bool disclose_;
  std::optional<StrategyState<Exact>> strategy_;
};

TurnRecord make_record(const GameState<Exact>& after, int value, const Exact& bid_p1,
                       const Exact& bid_p2) {
  TurnRecord r;
  r.index = after.turn_index - 1;
  r.value = value;
  r.bid_p1 = bid_p1;
  r.bid_p2 = bid_p2;
  r.winner = bid_p1 >= bid_p2 ? Player::P1 : Player::P2;
  r.budget_p1 = after.budget_p1;
  r.budget_p2 = after.budget_p2;
  r.score_p1 = after.score_p1;
  r.score_p2 = after.score_p2;
  return r;
}

Termination termination_of(const GameState<Exact>& s) {
  return (s.countdown.i <= 0 || s.countdown.j <= 0) ? Termination::CountdownReached
                                                    : Termination::TurnsExhausted;
}

}  // namespace

std::unique_ptr<Adversary> make_adversary(const AdversaryPolicy& policy, const GameConfig& config,
                                          std::uint64_t seed) {
  switch (policy.kind) {
    case AdversaryKind::AllIn:
      return std::make_unique<AllInAdversary>();
    case AdversaryKind::MatchPlusEpsilon:
      return std::make_unique<MatchAdversary>(
          policy.epsilon.value_or(config.budget_p2 * make_exact(1, 1000)));
    case AdversaryKind::RandomSeeded:
      return std::make_unique<RandomAdversary>(policy.seed, seed);
    case AdversaryKind::OmnipotentBestResponse:
      return std::make_unique<OmnipotentAdversary>(
          config, policy.grid_unit.value_or(config.budget_p2 * make_exact(1, 8)));
  }
  throw DomainError("unknown adversary kind");
}

GameTrace run_game(const GameConfig& config, const Exact& b1, const P1Policy& p1,
                   const AdversaryPolicy& p2, std::uint64_t seed,
                   const SimulationOptions& options) {
  config.validate();
  if (b1 <= 0) throw DomainError("P1 budget must be positive");

  GameTrace trace;
  trace.config = config;
  trace.b1 = b1;

  Bidder bidder(config, p1, options.disclose_bids);
  auto adversary = make_adversary(p2, config, seed);
  auto state = GameState<Exact>::fresh(config.turns, b1, config.budget_p2);

  while (!winner_if_decided(state)) {
    const int value = config.variant.is_set01() ? adversary->choose_value(state) : 1;
    const Exact bid_p1 = bidder.bid(state, value);
    if (bid_p1 < 0 || bid_p1 > state.budget_p1) {
      trace.fault = Fault{Player::P1, state.turn_index, bid_p1};
      trace.winner = Player::P2;
      trace.reason = Termination::Fault;
      return trace;
    }
    const Exact bid_p2 = adversary->respond(state, value, bid_p1);
    if (bid_p2 < 0 || bid_p2 > state.budget_p2) {
      trace.fault = Fault{Player::P2, state.turn_index, bid_p2};
      trace.winner = Player::P1;
      trace.reason = Termination::Fault;
      return trace;
    }
    state = settle_turn(state, config.variant, value, bid_p1, bid_p2);
    trace.turns.push_back(make_record(state, value, bid_p1, bid_p2));
    bidder.observe(value, bid_p1, bid_p1 >= bid_p2, bid_p2);
  }
  trace.winner = *winner_if_decided(state);
  trace.reason = termination_of(state);
  return trace;
}

std::vector<Exact> farey_fractions(int bound) {
  if (bound < 1) throw DomainError("denominator bound must be at least 1");
  std::set<Exact> out;
  for (int q = 1; q <= bound; ++q)
    for (int p = 0; p <= q; ++p) out.insert(make_exact(p, q));
  return {out.begin(), out.end()};
}

namespace {

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const GameConfig& config, int bound, const ExhaustiveOptions& options)
      : config_(config), options_(options), fractions_(farey_fractions(bound)) {
    matrix_ = std::make_shared<const CountdownMatrix<Exact>>(
        build_matrix<Exact>(config.variant, ceil_half(config.turns)));
  }

  bool run(const Exact& b1) {
    auto state = GameState<Exact>::fresh(config_.turns, b1, config_.budget_p2);
    auto strat = StrategyState<Exact>::start(matrix_, config_.turns, config_.budget_p2);
    return visit(state, strat);
  }

  std::vector<TurnRecord> path;
  std::uint64_t states = 0;
  std::uint64_t leaves = 0;
  std::uint64_t shortfalls = 0;

 private:
  using Key = std::tuple<int, int, int, Exact, Exact, Exact>;

  bool visit(const GameState<Exact>& state, const StrategyState<Exact>& strat) {
    if (auto w = winner_if_decided(state)) {
      ++leaves;
      return *w == Player::P1;
    }
    Key key{state.turn_index, state.score_p1, state.score_p2, state.budget_p1, state.budget_p2,
            strat.tracked_budget};
    if (won_.count(key)) return true;
    if (++states > options_.max_states)
      throw ResourceError("exhaustive check exceeded " + std::to_string(options_.max_states) +
                              " states (" + std::to_string(leaves) + " leaves so far)",
                          states);

    const std::vector<int> values =
        config_.variant.is_set01() ? std::vector<int>{1, 0} : std::vector<int>{1};
    for (int value : values) {
      Exact bid_p1 = strat.decided() ? Exact(0) : next_bid(strat, value);
      if (bid_p1 > state.budget_p1) {
        ++shortfalls;
        bid_p1 = state.budget_p1;
      }
      for (const Exact& bid_p2 : p2_bids(state.budget_p2)) {
        const auto next = settle_turn(state, config_.variant, value, bid_p1, bid_p2);
        const bool p1_won = bid_p1 >= bid_p2;
        std::optional<Exact> disclosed;
        if (options_.disclose_bids) disclosed = bid_p2;
        const auto next_strat = observe_outcome(strat, value, bid_p1, p1_won, disclosed);
        path.push_back(make_record(next, value, bid_p1, bid_p2));
        if (!visit(next, next_strat)) return false;
        path.pop_back();
      }
    }
    won_.insert(std::move(key));
    return true;
  }

  std::vector<Exact> p2_bids(const Exact& budget) const {
    std::vector<Exact> bids;
    for (const Exact& f : fractions_) {
      Exact bid = f * config_.budget_p2;
      if (bid > budget) break;
      bids.push_back(std::move(bid));
    }
    if (bids.empty() || bids.back() != budget) bids.push_back(budget);
    return bids;
  }

  GameConfig config_;
  ExhaustiveOptions options_;
  std::vector<Exact> fractions_;
  std::shared_ptr<const CountdownMatrix<Exact>> matrix_;
  std::set<Key> won_;
};

}  // namespace

ExhaustiveVerdict exhaustive_adversary_check(const GameConfig& config, const Exact& b1,
                                             int denominator_bound,
                                             const ExhaustiveOptions& options) {
  config.validate();
  if (b1 < 0) throw DomainError("P1 budget must be nonnegative");
  ExhaustiveSearch search(config, denominator_bound, options);
  ExhaustiveVerdict verdict;
  verdict.win_all = search.run(b1);
  verdict.states_visited = search.states;
  verdict.leaves = search.leaves;
  verdict.budget_shortfalls = search.shortfalls;
  if (!verdict.win_all) {
    GameTrace trace;
    trace.config = config;
    trace.b1 = b1;
    trace.turns = search.path;
    trace.winner = Player::P2;
    const auto& last = search.path.back();
    auto end = GameState<Exact>::fresh(config.turns, b1, config.budget_p2);
    end.turn_index = last.index + 1;
    end.score_p1 = last.score_p1;
    end.score_p2 = last.score_p2;
    end.countdown = countdown_for(config.turns, end.turn_index, end.score_p1, end.score_p2);
    trace.reason = termination_of(end);
    verdict.counterexample = std::move(trace);
  }
  return verdict;
}

nlohmann::json to_json(const GameTrace& trace) {
  using nlohmann::json;
  const GameConfig& c = trace.config;
  json config = {
      {"pricing", c.variant.is_all_pay() ? "all-pay" : "first-price"},
      {"alpha", to_double(c.variant.loser_rate())},
      {"values", c.variant.is_set01() ? "set01" : "fixed"},
      {"turns", c.turns},
      {"b1", to_double(trace.b1)},
      {"b2", to_double(c.budget_p2)},
  };
  json turns = json::array();
  for (const TurnRecord& r : trace.turns) {
    turns.push_back(json{
        {"index", r.index},
        {"value", r.value},
        {"bid_p1", to_double(r.bid_p1)},
        {"bid_p2", to_double(r.bid_p2)},
        {"winner", to_string(r.winner)},
        {"budget_p1", to_double(r.budget_p1)},
        {"budget_p2", to_double(r.budget_p2)},
        {"score_p1", r.score_p1},
        {"score_p2", r.score_p2},
    });
  }
  std::string reason = "exhausted";
  if (trace.reason == Termination::CountdownReached) reason = "countdown";
  if (trace.reason == Termination::Fault) reason = "fault";
  json doc = {{"config", std::move(config)},
              {"turns", std::move(turns)},
              {"winner", to_string(trace.winner)},
              {"reason", reason}};
  if (trace.fault) {
    doc["fault"] = json{{"player", to_string(trace.fault->player)},
                        {"turn", trace.fault->turn},
                        {"bid", to_double(trace.fault->bid)}};
  }
  return doc;
}

std::string to_json_string(const GameTrace& trace) { return to_json(trace).dump(); }

}  // namespace mbc
