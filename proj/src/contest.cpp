#include "mbc/contest.hpp"

#include <algorithm>

namespace mbc {

std::string_view to_string(Player p) { return p == Player::P1 ? "P1" : "P2"; }

AuctionVariant AuctionVariant::first_price(ValueModel values) {
  return AuctionVariant{Pricing::FirstPrice, values, Exact(0)};
}

AuctionVariant AuctionVariant::all_pay(ValueModel values, Exact alpha) {
  return AuctionVariant{Pricing::AllPay, values, std::move(alpha)};
}

const Exact& AuctionVariant::loser_rate() const {
  static const Exact zero(0);
  return pricing == Pricing::AllPay ? alpha : zero;
}

void AuctionVariant::validate() const {
  if (pricing == Pricing::AllPay && (alpha < 0 || alpha > 1))
    throw DomainError("all-pay ratio must lie in [0, 1], got " + format_exact(alpha));
}

std::string AuctionVariant::name() const {
  std::string out = pricing == Pricing::FirstPrice ? "fp" : "ap";
  out += values == ValueModel::Set01 ? "-set" : "-fixed";
  return out;
}

AuctionVariant parse_variant(std::string_view name, std::optional<Exact> alpha) {
  AuctionVariant v;
  if (name == "fp-set") {
    v = AuctionVariant::first_price(ValueModel::Set01);
  } else if (name == "fp-fixed") {
    v = AuctionVariant::first_price(ValueModel::Fixed1);
  } else if (name == "ap-set") {
    v = AuctionVariant::all_pay(ValueModel::Set01, alpha.value_or(Exact(1)));
  } else if (name == "ap-fixed") {
    v = AuctionVariant::all_pay(ValueModel::Fixed1, alpha.value_or(Exact(1)));
  } else {
    throw DomainError("unknown variant '" + std::string(name) +
                      "' (expected fp-set, fp-fixed, ap-set or ap-fixed)");
  }
  if (alpha && v.pricing == Pricing::FirstPrice && *alpha != 0)
    throw DomainError("--alpha only applies to all-pay variants");
  v.validate();
  return v;
}

void GameConfig::validate() const {
  variant.validate();
  if (turns < 1) throw DomainError("turn count must be at least 1");
  if (budget_p2 <= 0) throw DomainError("P2 budget must be positive");
  if (score_budget_weight != 0)
    throw DomainError("only a zero score weight on leftover budget is supported");
}

CountdownPair countdown_for(int turns, int turn_index, int score_p1, int score_p2) {
  const int reachable = score_p1 + score_p2 + (turns - turn_index);
  const int half = ceil_half(reachable);
  return CountdownPair{std::max(0, half - score_p1), std::max(0, half - score_p2)};
}

template <ContestNumber Num>
GameState<Num> settle_turn(const GameState<Num>& state, const AuctionVariant& variant, int value,
                           const Num& bid_p1, const Num& bid_p2) {
  if (value != 0 && value != 1) throw DomainError("turn value must be 0 or 1");
  if (variant.values == ValueModel::Fixed1 && value != 1)
    throw DomainError("fixed-value contests only have value-1 turns");
  if (state.turn_index >= state.turns) throw GameDecidedError("no turns left");
  if (bid_p1 < 0 || bid_p2 < 0) throw DomainError("bids must be nonnegative");
  if (bid_p1 > state.budget_p1) throw OverbidError(1, "P1 bid exceeds remaining budget");
  if (bid_p2 > state.budget_p2) throw OverbidError(2, "P2 bid exceeds remaining budget");

  const Num rate = from_exact<Num>(variant.loser_rate());
  GameState<Num> next = state;
  if (bid_p1 >= bid_p2) {
    next.budget_p1 -= bid_p1;
    next.budget_p2 -= rate * bid_p2;
    next.score_p1 += value;
  } else {
    next.budget_p2 -= bid_p2;
    next.budget_p1 -= rate * bid_p1;
    next.score_p2 += value;
  }
  // Float residue only; exact mode never goes negative.
  if (next.budget_p1 < 0) next.budget_p1 = 0;
  if (next.budget_p2 < 0) next.budget_p2 = 0;
  next.turn_index += 1;
  next.countdown = countdown_for(next.turns, next.turn_index, next.score_p1, next.score_p2);
  return next;
}

template GameState<Exact> settle_turn(const GameState<Exact>&, const AuctionVariant&, int,
                                      const Exact&, const Exact&);
template GameState<double> settle_turn(const GameState<double>&, const AuctionVariant&, int,
                                       const double&, const double&);

}  // namespace mbc
