#include "doctest.h"

#include <vector>

#include "snap/backend.hpp"
#include "snap/bbx.hpp"
#include "snap/rng.hpp"

using namespace snap;

namespace {

std::unique_ptr<PermOracle> sym_oracle(std::uint32_t n, std::uint64_t seed = 1) {
  return natural_oracle(GroupSpec::sym(n), seed);
}

// All partitions of n (as multisets of parts), for exhaustive order checks.
void partitions_rec(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace

TEST_CASE("power by repeated squaring") {
  auto G = sym_oracle(9);
  auto x1 = G->wrap(Permutation::from_cycles(9, {{1, 2, 3}}));
  CHECK(G->equal(power(*G, x1, BigInt(3)), G->identity()));

  auto x2 = G->wrap(Permutation::from_cycles(9, {{1, 2}, {3, 4, 5}}));
  CHECK(as_permutation(power(*G, x2, BigInt(315))) == Permutation::from_cycles(9, {{1, 2}}));

  CHECK(G->equal(power(*G, x2, BigInt(1)), x2));
  CHECK(G->equal(power(*G, x2, BigInt(0)), G->identity()));
  CHECK_THROWS_AS(power(*G, x2, BigInt(-2)), std::invalid_argument);
}

TEST_CASE("power agrees with direct permutation arithmetic") {
  auto G = sym_oracle(9, 77);
  RandomStream rng(123);
  for (int i = 0; i < 300; ++i) {
    Permutation p = rng.uniform_perm(9);
    const long long e = static_cast<long long>(rng.below(1001));
    CHECK(as_permutation(power(*G, G->wrap(p), BigInt(e))) == p.power(e));
  }
}

TEST_CASE("power uses logarithmically many multiplications") {
  auto G = sym_oracle(9);
  auto x = G->wrap(Permutation::from_cycles(9, {{1, 2, 3, 4, 5, 6, 7}}));
  const auto before = G->counters();
  power(*G, x, BigInt(1) << 40);
  const auto used = G->counters() - before;
  CHECK(used.multiplications <= 82);  // 2 per bit at worst
}

TEST_CASE("odd part exponent") {
  CHECK(odd_part_exponent(9) == 315);   // 3^2 * 5 * 7
  CHECK(odd_part_exponent(3) == 3);
  CHECK(odd_part_exponent(10) == 315);
  CHECK(odd_part_exponent(9) % 2 == 1);
  CHECK_THROWS_AS(odd_part_exponent(2), std::invalid_argument);
}

TEST_CASE("odd part exponent covers every element order of Sym_N") {
  for (unsigned N = 3; N <= 30; ++N) {
    const BigInt M = odd_part_exponent(N);
    CHECK(M % 2 == 1);
    for (const auto& partition : partitions_of(N)) {
      BigInt order = 1;
      for (unsigned part : partition) {
        BigInt l = part;
        order = order / boost::multiprecision::gcd(order, l) * l;
      }
      while (order % 2 == 0) order /= 2;  // odd part of the order
      CHECK(M % order == 0);
    }
  }
}

TEST_CASE("successive prime-power exponentiation matches one-shot powering") {
  auto G = sym_oracle(12, 5);
  RandomStream rng(9);
  for (int i = 0; i < 50; ++i) {
    Permutation p = rng.uniform_perm(12);
    auto x = G->wrap(p);
    CHECK(G->equal(power_by_odd_part(*G, x, 12), power(*G, x, odd_part_exponent(12))));
  }
}

TEST_CASE("two power reduce") {
  auto G = sym_oracle(9);
  SUBCASE("an involution is returned unchanged") {
    auto x = G->wrap(Permutation::from_cycles(9, {{1, 2}, {3, 4}}));
    auto r = two_power_reduce(*G, x, 9);
    REQUIRE(r.status == TwoPowerResult::Status::reduced);
    CHECK(as_permutation(r.value) == Permutation::from_cycles(9, {{1, 2}, {3, 4}}));
  }
  SUBCASE("an order-four element is squared once") {
    auto x = G->wrap(Permutation::from_cycles(9, {{1, 2, 3, 4}, {5, 6}}));
    auto r = two_power_reduce(*G, x, 9);
    REQUIRE(r.status == TwoPowerResult::Status::reduced);
    CHECK(as_permutation(r.value) == Permutation::from_cycles(9, {{1, 3}, {2, 4}}));
  }
  SUBCASE("the identity is discarded") {
    auto r = two_power_reduce(*G, G->identity(), 9);
    CHECK(r.status == TwoPowerResult::Status::discard);
  }
  SUBCASE("orders impossible below the degree bound certify failure") {
    auto big = natural_oracle(GroupSpec::sym(32), 3);
    std::vector<std::uint32_t> c32(32);
    for (std::uint32_t i = 0; i < 32; ++i) c32[i] = i + 1;
    auto x = big->wrap(Permutation::from_cycles(32, {c32}));  // order 32
    CHECK(two_power_reduce(*big, x, 9).status == TwoPowerResult::Status::failure);
    CHECK(two_power_reduce(*big, x, 32).status == TwoPowerResult::Status::reduced);
  }
  SUBCASE("odd order violates the precondition and fails") {
    auto x = G->wrap(Permutation::from_cycles(9, {{1, 2, 3}}));
    CHECK(two_power_reduce(*G, x, 9).status == TwoPowerResult::Status::failure);
  }
}

TEST_CASE("two power reduce returns a nontrivial involution on M-th powers") {
  for (std::uint32_t n = 9; n <= 12; ++n) {
    auto G = natural_oracle(GroupSpec::sym(n), 1000 + n);
    int reduced = 0;
    for (int i = 0; i < 2500; ++i) {
      Element t = power_by_odd_part(*G, G->random_element(), n);
      auto r = two_power_reduce(*G, t, n);
      REQUIRE(r.status != TwoPowerResult::Status::failure);
      if (r.status == TwoPowerResult::Status::reduced) {
        ++reduced;
        const Permutation& y = as_permutation(r.value);
        CHECK_FALSE(y.is_identity());
        CHECK(y.power(2).is_identity());
      }
    }
    CHECK(reduced > 0);
  }
}

TEST_CASE("commutation test") {
  auto G = sym_oracle(9);
  CHECK(commutes(*G, G->wrap(Permutation::from_cycles(9, {{1, 2}})),
                 G->wrap(Permutation::from_cycles(9, {{3, 4}}))));
  CHECK_FALSE(commutes(*G, G->wrap(Permutation::from_cycles(9, {{1, 2}})),
                       G->wrap(Permutation::from_cycles(9, {{2, 3}}))));
  auto x = G->wrap(Permutation::from_cycles(9, {{1, 5, 2}}));
  CHECK(commutes(*G, x, x));
}

TEST_CASE("conjugation through the oracle") {
  auto G = sym_oracle(9);
  auto x = G->wrap(Permutation::from_cycles(9, {{1, 2, 3}}));
  auto y = G->wrap(Permutation::from_cycles(9, {{3, 4}}));
  CHECK(as_permutation(conjugate(*G, x, y)) == Permutation::from_cycles(9, {{1, 2, 4}}));
  CHECK(G->equal(conjugate(*G, x, G->identity()), x));
  auto t = G->wrap(Permutation::from_cycles(9, {{1, 2}}));
  CHECK(G->equal(conjugate(*G, t, t), t));
}

TEST_CASE("prime order test") {
  auto G = sym_oracle(9);
  CHECK(has_prime_order(*G, G->wrap(Permutation::from_cycles(9, {{1, 2, 3, 4, 5}})), 5));
  CHECK_FALSE(has_prime_order(*G, G->identity(), 5));
  CHECK_FALSE(has_prime_order(*G, G->wrap(Permutation::from_cycles(9, {{1, 2, 3}})), 5));
  CHECK(has_prime_order(*G, G->wrap(Permutation::from_cycles(9, {{1, 2, 3}})), 3));
  CHECK_THROWS_AS(has_prime_order(*G, G->identity(), 7), std::invalid_argument);
}

TEST_CASE("every oracle call increments exactly one counter") {
  auto G = sym_oracle(6, 11);
  auto a = G->wrap(Permutation::from_cycles(6, {{1, 2}}));
  auto b = G->wrap(Permutation::from_cycles(6, {{2, 3}}));
  CHECK(G->counters().total() == 0);

  G->multiply(a, b);
  CHECK(G->counters().multiplications == 1);
  CHECK(G->counters().total() == 1);

  G->invert(a);
  CHECK(G->counters().inversions == 1);

  G->equal(a, b);
  CHECK(G->counters().equality_tests == 1);

  G->random_element();
  CHECK(G->counters().random_draws == 1);

  const auto snap1 = G->counters();
  commutes(*G, a, b);
  auto delta = G->counters() - snap1;
  CHECK(delta.multiplications == 2);
  CHECK(delta.equality_tests == 1);
  CHECK(delta.inversions == 0);

  const auto snap2 = G->counters();
  conjugate(*G, a, b);
  delta = G->counters() - snap2;
  CHECK(delta.multiplications == 2);
  CHECK(delta.inversions == 1);
}
