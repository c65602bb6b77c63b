#include <doctest.h>

#include <random>

#include "mbc/contest.hpp"

using namespace mbc;

namespace {

Exact q(std::int64_t p, std::int64_t d = 1) { return make_exact(p, d); }

GameState<Exact> state(int turns, Exact b1, Exact b2) {
  return GameState<Exact>::fresh(turns, std::move(b1), std::move(b2));
}

}  // namespace

TEST_CASE("settle_turn: first-price tie goes to the dealer") {
  const auto v = AuctionVariant::first_price(ValueModel::Set01);
  const auto s = settle_turn(state(3, q(3, 2), q(1)), v, 1, q(1, 2), q(1, 2));
  CHECK(s.score_p1 == 1);
  CHECK(s.score_p2 == 0);
  CHECK(s.budget_p1 == q(1));
  CHECK(s.budget_p2 == q(1));
  CHECK(s.turn_index == 1);
  CHECK(s.countdown == CountdownPair{1, 2});
}

TEST_CASE("settle_turn: all-pay alpha 1 charges both bids") {
  const auto v = AuctionVariant::all_pay(ValueModel::Set01, 1);
  const auto s = settle_turn(state(3, q(2), q(1)), v, 1, q(2, 5), q(3, 5));
  CHECK(s.score_p2 == 1);
  CHECK(s.budget_p1 == q(8, 5));
  CHECK(s.budget_p2 == q(2, 5));
}

TEST_CASE("settle_turn: value-0 turn charges alpha share but scores nothing") {
  const auto v = AuctionVariant::all_pay(ValueModel::Set01, q(1, 2));
  const auto s = settle_turn(state(3, q(1), q(1)), v, 0, q(1, 5), q(3, 10));
  CHECK(s.score_p1 == 0);
  CHECK(s.score_p2 == 0);
  CHECK(s.budget_p1 == q(9, 10));
  CHECK(s.budget_p2 == q(7, 10));
}

TEST_CASE("settle_turn rejects overbids and bad values") {
  const auto v = AuctionVariant::first_price(ValueModel::Set01);
  const auto s = state(3, q(1), q(1));
  CHECK_THROWS_AS(settle_turn(s, v, 1, q(2), q(0)), OverbidError);
  CHECK_THROWS_AS(settle_turn(s, v, 1, q(0), q(3, 2)), OverbidError);
  CHECK_THROWS_AS(settle_turn(s, v, 1, q(-1, 2), q(0)), DomainError);
  CHECK_THROWS_AS(settle_turn(s, v, 2, q(0), q(0)), DomainError);
  try {
    settle_turn(s, v, 1, q(0), q(3, 2));
  } catch (const OverbidError& e) {
    CHECK(e.player() == 2);
  }
  const auto fixed = AuctionVariant::first_price(ValueModel::Fixed1);
  CHECK_THROWS_AS(settle_turn(state(3, q(1), q(1)), fixed, 0, q(0), q(0)), DomainError);
}

TEST_CASE("settle_turn works in float mode") {
  const auto v = AuctionVariant::first_price(ValueModel::Set01);
  const auto s0 = GameState<double>::fresh(3, 1.5, 1.0);
  const auto s = settle_turn(s0, v, 1, 0.25, 0.75);
  CHECK(s.budget_p2 == doctest::Approx(0.25));
  CHECK(s.budget_p1 == doctest::Approx(1.5));
  CHECK(s.score_p2 == 1);
}

TEST_CASE("winner_if_decided") {
  GameState<Exact> s = state(3, q(1), q(1));
  CHECK(!winner_if_decided(s).has_value());

  s.countdown = {0, 2};
  CHECK(winner_if_decided(s) == Player::P1);
  s.countdown = {2, 0};
  CHECK(winner_if_decided(s) == Player::P2);
  s.countdown = {1, 1};
  CHECK(!winner_if_decided(s).has_value());

  s.turn_index = 3;
  s.score_p1 = 1;
  s.score_p2 = 1;
  CHECK(winner_if_decided(s) == Player::P1);
  s.score_p2 = 2;
  CHECK(winner_if_decided(s) == Player::P2);
}

TEST_CASE("countdown_for") {
  CHECK(countdown_for(3, 0, 0, 0) == CountdownPair{2, 2});
  CHECK(countdown_for(5, 0, 0, 0) == CountdownPair{3, 3});
  CHECK(countdown_for(1, 0, 0, 0) == CountdownPair{1, 1});
  // A value-0 turn shrinks the reachable total for both players.
  CHECK(countdown_for(3, 1, 0, 0) == CountdownPair{1, 1});
  CHECK(countdown_for(5, 1, 1, 0) == CountdownPair{2, 3});
  CHECK(countdown_for(3, 3, 2, 1) == CountdownPair{0, 1});
  CHECK(ceil_half(5) == 3);
  CHECK(ceil_half(4) == 2);
  CHECK(ceil_half(0) == 0);
  CHECK(ceil_half(-1) == 0);
}

TEST_CASE("parse_variant") {
  CHECK(parse_variant("fp-set") == AuctionVariant::first_price(ValueModel::Set01));
  CHECK(parse_variant("fp-fixed") == AuctionVariant::first_price(ValueModel::Fixed1));
  CHECK(parse_variant("ap-set").alpha == q(1));
  CHECK(parse_variant("ap-fixed", q(1, 2)).alpha == q(1, 2));
  CHECK(parse_variant("ap-set", q(1, 2)).name() == "ap-set");
  CHECK_THROWS_AS(parse_variant("bogus"), DomainError);
  CHECK_THROWS_AS(parse_variant("ap-set", q(3, 2)), DomainError);
  CHECK_THROWS_AS(parse_variant("ap-set", q(-1, 2)), DomainError);
  CHECK_THROWS_AS(parse_variant("fp-set", q(1, 2)), DomainError);
}

TEST_CASE("property: random legal playouts keep budgets nonnegative and scores bounded") {
  std::mt19937_64 rng(20261015);
  const AuctionVariant variants[] = {
      AuctionVariant::first_price(ValueModel::Set01),
      AuctionVariant::first_price(ValueModel::Fixed1),
      AuctionVariant::all_pay(ValueModel::Set01, q(1, 3)),
      AuctionVariant::all_pay(ValueModel::Fixed1, 1),
  };
  for (int trial = 0; trial < 400; ++trial) {
    const auto& v = variants[trial % 4];
    const int turns = 1 + static_cast<int>(rng() % 9);
    auto s = state(turns, q(1 + static_cast<std::int64_t>(rng() % 5)), q(1));
    while (!winner_if_decided(s)) {
      const int value = v.is_set01() ? static_cast<int>(rng() % 2) : 1;
      const Exact x1 = s.budget_p1 * q(static_cast<std::int64_t>(rng() % 17), 16);
      const Exact x2 = s.budget_p2 * q(static_cast<std::int64_t>(rng() % 17), 16);
      const auto next = settle_turn(s, v, value, x1, x2);
      CHECK(next.budget_p1 >= 0);
      CHECK(next.budget_p2 >= 0);
      CHECK(next.score_p1 + next.score_p2 <= turns);
      const bool p1_won = x1 >= x2;
      CHECK(next.score_p1 == s.score_p1 + (p1_won ? value : 0));
      CHECK(next.score_p2 == s.score_p2 + (p1_won ? 0 : value));
      CHECK(next.countdown == countdown_for(turns, next.turn_index, next.score_p1, next.score_p2));
      s = next;
    }
  }
}
