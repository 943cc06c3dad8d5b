#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "snap/perm.hpp"
#include "snap/rng.hpp"

using namespace snap;

namespace {

// Chi-squared critical values at significance 1e-3.
constexpr double kChi2Crit23 = 49.728;  // 24 cells
constexpr double kChi2Crit11 = 31.264;  // 12 cells
constexpr double kChi2Crit29 = 58.301;  // 30 cells

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

double chi2_statistic(const std::map<std::string, std::size_t>& counts, std::size_t cells,
                      std::size_t draws) {
  const double expected = static_cast<double>(draws) / static_cast<double>(cells);
  double stat = 0.0;
  std::size_t seen = 0;
  for (const auto& [key, cnt] : counts) {
    (void)key;
    const double d = static_cast<double>(cnt) - expected;
    stat += d * d / expected;
    ++seen;
  }
  // Cells never hit contribute their full expected count.
  stat += static_cast<double>(cells - seen) * expected;
  return stat;
}

}  // namespace

TEST_CASE("composition follows the right action") {
  auto p = Permutation::from_cycles(3, {{1, 2}});
  auto q = Permutation::from_cycles(3, {{2, 3}});
  auto pq = p.compose(q);
  CHECK(pq == Permutation::from_cycles(3, {{1, 3, 2}}));
  CHECK(pq.image(1) == 3);
  CHECK(pq.image(3) == 2);
  CHECK(pq.image(2) == 1);
}

TEST_CASE("identity and inverse laws") {
  RandomStream rng(2024);
  for (int i = 0; i < 50; ++i) {
    Permutation p = rng.uniform_perm(8);
    Permutation q = rng.uniform_perm(8);
    CHECK(p.compose(Permutation(8)) == p);
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK(p.compose(q).inverse() == q.inverse().compose(p.inverse()));
  }
}

TEST_CASE("compose rejects degree mismatch") {
  CHECK_THROWS_AS(Permutation(3).compose(Permutation(4)), std::invalid_argument);
}

TEST_CASE("cycle type") {
  auto p = Permutation::from_cycles(6, {{1, 2}, {3, 4, 5}});
  CHECK(p.cycle_type() == std::vector<std::size_t>{3, 2, 1});
  CHECK(Permutation(4).cycle_type() == std::vector<std::size_t>{1, 1, 1, 1});
  auto c9 = Permutation::from_cycles(9, {{1, 2, 3, 4, 5, 6, 7, 8, 9}});
  CHECK(c9.cycle_type() == std::vector<std::size_t>{9});
  CHECK(p.support_size() == 5);
  CHECK(p.support() == std::vector<std::uint32_t>{1, 2, 3, 4, 5});
}

TEST_CASE("cycle type is invariant under conjugation") {
  RandomStream rng(7);
  for (int i = 0; i < 1000; ++i) {
    Permutation p = rng.uniform_perm(7);
    Permutation q = rng.uniform_perm(7);
    CHECK(p.conjugated_by(q).cycle_type() == p.cycle_type());
  }
}

TEST_CASE("conjugation relabels points") {
  auto x = Permutation::from_cycles(5, {{1, 2, 3}});
  auto y = Permutation::from_cycles(5, {{3, 4}});
  CHECK(x.conjugated_by(y) == Permutation::from_cycles(5, {{1, 2, 4}}));
  CHECK(x.conjugated_by(y) == y.inverse().compose(x).compose(y));
}

TEST_CASE("powers, parity, order") {
  auto x = Permutation::from_cycles(6, {{1, 2}, {3, 4, 5}});
  CHECK(x.power(0).is_identity());
  CHECK(x.power(1) == x);
  CHECK(x.power(6).is_identity());
  CHECK(x.power(-1) == x.inverse());
  CHECK(x.power(315) == Permutation::from_cycles(6, {{1, 2}}));
  CHECK(x.order() == 6);
  CHECK_FALSE(x.is_even());
  CHECK(Permutation::from_cycles(5, {{1, 2, 3}}).is_even());
  CHECK(Permutation(5).is_even());

  Permutation acc(6);
  for (int e = 1; e <= 20; ++e) {
    acc = acc.compose(x);
    CHECK(x.power(e) == acc);
  }
}

TEST_CASE("cycle predicates and printing") {
  auto g = Permutation::from_cycles(9, {{1, 2, 3, 4, 5, 6, 7}});
  CHECK(g.is_cycle_of_length(7));
  CHECK_FALSE(g.is_cycle_of_length(9));
  CHECK_FALSE(Permutation::from_cycles(9, {{1, 2}, {3, 4, 5}}).is_cycle_of_length(5));
  CHECK(g.str() == "(1,2,3,4,5,6,7)");
  CHECK(Permutation(4).str() == "()");
  CHECK(Permutation::from_cycles(6, {{3, 4, 5}, {1, 2}}).str() == "(1,2)(3,4,5)");
}

TEST_CASE("image list round trip") {
  auto p = Permutation::from_cycles(5, {{1, 4}, {2, 3}});
  CHECK(Permutation::from_image_list(p.image_list()) == p);
  CHECK_THROWS_AS(Permutation::from_image_list({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_image_list({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("random stream is deterministic and splittable") {
  RandomStream a(42);
  RandomStream b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RandomStream root(42);
  auto c1 = root.split("phase-one");
  auto c2 = root.split("phase-two");
  CHECK(c1.seed() != c2.seed());
  auto c1_again = root.split("phase-one");
  CHECK(c1.seed() == c1_again.seed());

  RandomStream r(5);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(13) < 13);
  CHECK_THROWS_AS(r.below(0), std::invalid_argument);
}

TEST_CASE("uniform sampling over the symmetric group") {
  RandomStream rng(20240817);
  SUBCASE("degree one gives the identity") {
    CHECK(rng.uniform_perm(1).is_identity());
  }
  SUBCASE("chi-squared uniformity over all 24 elements of S4") {
    const std::size_t draws = 100000;
    std::map<std::string, std::size_t> counts;
    for (std::size_t i = 0; i < draws; ++i) counts[rng.uniform_perm(4).str()]++;
    CHECK(counts.size() == 24);
    CHECK(chi2_statistic(counts, 24, draws) < kChi2Crit23);
  }
}

TEST_CASE("uniform sampling over the alternating group") {
  RandomStream rng(99);
  SUBCASE("all draws are even") {
    for (int i = 0; i < 10000; ++i) CHECK(rng.uniform_even_perm(7).is_even());
  }
  SUBCASE("chi-squared uniformity over all 12 elements of A4") {
    const std::size_t draws = 60000;
    std::map<std::string, std::size_t> counts;
    for (std::size_t i = 0; i < draws; ++i) counts[rng.uniform_even_perm(4).str()]++;
    CHECK(counts.size() == 12);
    CHECK(chi2_statistic(counts, 12, draws) < kChi2Crit11);
  }
  SUBCASE("exactly the even half of S4 is reachable") {
    std::set<std::string> seen;
    for (int i = 0; i < 5000; ++i) seen.insert(rng.uniform_even_perm(4).str());
    std::size_t even_count = 0;
    for (const auto& p : all_perms(4))
      if (p.is_even()) ++even_count;
    CHECK(seen.size() == even_count);
  }
}

TEST_CASE("bounded sampling is unbiased enough for small moduli") {
  RandomStream rng(31337);
  const std::size_t draws = 90000;
  std::map<std::string, std::size_t> counts;
  for (std::size_t i = 0; i < draws; ++i) counts[std::to_string(rng.below(30))]++;
  CHECK(chi2_statistic(counts, 30, draws) < kChi2Crit29);
}
