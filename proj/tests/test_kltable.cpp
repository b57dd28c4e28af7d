#include "doctest.h"

#include <random>
#include <sstream>

#include "klcx/kltable.hpp"
#include "oracles/bar_involution.hpp"

using namespace klcx;

namespace {

void check_against_oracle(const GroupTable& g) {
  KLTable kl(g);
  kl.build_all();
  oracle::BarInvolution bar(g);
  const int n = static_cast<int>(g.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto expected = bar.P(y, x);
      if (kl.polynomial(y, x).dense() != expected)
        FAIL("P mismatch at y=" << g.word_string(y) << " x=" << g.word_string(x));
    }
}

}  // namespace

TEST_CASE("affine A1 polynomials are all 1 on comparable pairs") {
  const GroupTable g = generate(build_root_system("A1"), 12);
  KLTable kl(g);
  kl.build_all();
  for (int x = 0; x < static_cast<int>(g.size()); ++x)
    for (int y = 0; y < static_cast<int>(g.size()); ++y) {
      const bool below = y == x || g.length(y) < g.length(x);
      CHECK(kl.polynomial(y, x) == (below ? QPolynomial::constant(1) : QPolynomial()));
    }
  const int x = g.index_of("s1 s0 s1 s0");
  CHECK(kl.mu(g.index_of("s0 s1 s0"), x) == 1);
  CHECK(kl.mu(x, g.index_of("s0 s1 s0")) == 1);
  CHECK(kl.mu(g.index_of("s1"), x) == 0);  // length gap 3: coefficient of t^2 in 1
}

TEST_CASE("zero exactly off the Bruhat order") {
  const GroupTable g = generate(build_root_system("A2"), 5);
  KLTable kl(g);
  kl.build_all();
  const BruhatOrder order(g);
  for (int x = 0; x < static_cast<int>(g.size()); ++x)
    for (int y = 0; y < static_cast<int>(g.size()); ++y) CHECK(kl.polynomial(y, x).is_zero() == !order.leq(y, x));
  CHECK(kl.polynomial(g.index_of("s1"), g.index_of("s0 s2")).is_zero());
}

TEST_CASE("agreement with the bar-involution oracle") {
  SUBCASE("finite A3") { check_against_oracle(generate(build_root_system("A3"), 6, false)); }
  SUBCASE("finite B3") { check_against_oracle(generate(build_root_system("B3"), 9, false)); }
  SUBCASE("affine A2 to length 5") { check_against_oracle(generate(build_root_system("A2"), 5)); }
  SUBCASE("affine B2 to length 6") { check_against_oracle(generate(build_root_system("B2"), 6)); }
}

TEST_CASE("a nontrivial polynomial in finite A3") {
  // P_{s2, s2 s1 s3 s2} = 1 + q is the smallest singular Schubert variety.
  const GroupTable g = generate(build_root_system("A3"), 6, false);
  KLTable kl(g);
  kl.build_all();
  CHECK(kl.polynomial(g.index_of("s2"), g.index_of("s2 s1 s3 s2")).dense() == std::vector<std::int64_t>{1, 1});
  CHECK(kl.polynomial(0, g.index_of("s2 s1 s3 s2")).dense() == std::vector<std::int64_t>{1, 1});
  CHECK(kl.mu(g.index_of("s2"), g.index_of("s2 s1 s3 s2")) == 1);
}

TEST_CASE("structural invariants on affine A2") {
  const GroupTable g = generate(build_root_system("A2"), 8);
  KLTable kl(g);
  kl.build_all();
  const int n = static_cast<int>(g.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < g.level_begin(g.length(x)); ++y) {
      const QPolynomial& p = kl.polynomial(y, x);
      if (p.is_zero()) continue;
      CHECK(p.coefficient(0) == 1);
      CHECK(2 * p.degree() <= g.length(x) - g.length(y) - 1);
      for (const auto& t : p.terms()) CHECK(t.coeff > 0);
      for (int odd = 1; odd < 20; odd += 2) CHECK(t_coefficient(p, odd) == 0);
    }
}

TEST_CASE("descent choice does not matter") {
  const GroupTable g = generate(build_root_system("A2"), 8);
  KLTable a(g, DescentRule::Smallest);
  KLTable b(g, DescentRule::Largest);
  a.build_all();
  b.build_all();
  for (int x = 0; x < static_cast<int>(g.size()); ++x)
    for (int y = 0; y < static_cast<int>(g.size()); ++y) CHECK(a.polynomial(y, x) == b.polynomial(y, x));
}

TEST_CASE("mu is symmetric") {
  const GroupTable g = generate(build_root_system("A2"), 7);
  KLTable kl(g);
  kl.build_all();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g.size()) - 1);
  for (int i = 0; i < 100; ++i) {
    const int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    CHECK(kl.mu(a, b) == kl.mu(b, a));
    CHECK(kl.mu(a, b) >= 0);
  }
  for (int x = 0; x < static_cast<int>(g.size()); ++x)
    for (const auto& [z, m] : kl.mu_below(x)) CHECK(kl.mu(z, x) == m);
}

TEST_CASE("lazy queries match the bulk build") {
  const GroupTable g = generate(build_root_system("B2"), 7);
  KLTable bulk(g);
  bulk.build_all();
  KLTable lazy(g);
  const int x = g.level_begin(7) + 1;
  for (int y = 0; y < static_cast<int>(g.size()); y += 3) CHECK(lazy.compute(y, x) == bulk.polynomial(y, x));
  CHECK(lazy.row_ready(x));
  CHECK_FALSE(lazy.complete());
  CHECK_THROWS_AS(lazy.polynomial(0, g.level_begin(7) + 2), std::logic_error);
}

TEST_CASE("threaded build is identical") {
  const GroupTable g = generate(build_root_system("A2"), 7);
  KLTable one(g), four(g);
  one.build_all(1);
  four.build_all(4);
  std::ostringstream a, b;
  one.write_cache(a);
  four.write_cache(b);
  CHECK(a.str() == b.str());
}

TEST_CASE("cache round trip") {
  const GroupTable g = generate(build_root_system("B2"), 6);
  KLTable kl(g);
  kl.build_all();
  std::ostringstream text;
  kl.write_cache(text);
  CHECK(text.str().rfind("klcx-kl-cache 1\ngroup B2 affine L=6\n", 0) == 0);

  KLTable replay(g);
  std::istringstream in(text.str());
  CHECK(replay.load_cache(in) == static_cast<int>(g.size()));
  CHECK(replay.complete());
  std::ostringstream again;
  replay.write_cache(again);
  CHECK(again.str() == text.str());

  // A shorter cache seeds a prefix and the rest is computed.
  const GroupTable small = generate(build_root_system("B2"), 4);
  KLTable partial_src(small);
  partial_src.build_all();
  std::ostringstream small_text;
  partial_src.write_cache(small_text);
  KLTable grown(g);
  std::istringstream small_in(small_text.str());
  CHECK(grown.load_cache(small_in) == small.size());
  grown.build_all();
  std::ostringstream grown_text;
  grown.write_cache(grown_text);
  CHECK(grown_text.str() == text.str());
}

TEST_CASE("malformed caches are rejected") {
  const GroupTable g = generate(build_root_system("A2"), 3);
  auto load = [&](const std::string& s) {
    KLTable kl(g);
    std::istringstream in(s);
    kl.load_cache(in);
  };
  CHECK_THROWS_AS(load("nope\n"), std::invalid_argument);
  CHECK_THROWS_AS(load("klcx-kl-cache 1\ngroup B2 affine L=3\n"), std::invalid_argument);
  CHECK_THROWS_AS(load("klcx-kl-cache 1\ngroup A2 affine L=3\ne | s1 | -1\n"), std::invalid_argument);
  CHECK_THROWS_AS(load("klcx-kl-cache 1\ngroup A2 affine L=3\ne s1\n"), std::invalid_argument);
  CHECK_THROWS_AS(load("klcx-kl-cache 1\ngroup A2 affine L=3\ns1 | s1 | 2\n"), std::invalid_argument);
}
