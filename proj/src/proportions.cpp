#include "snap/proportions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace snap {

namespace {

// counts[m] = {even, odd} counts of permutations of Sym_m all of whose cycle
// lengths satisfy `allowed`, computed by removing the cycle through a marked
// point: a cycle of length l can be completed in (m-1)!/(m-l)! ways and
// contributes parity (l-1).
using ParityCounts = std::vector<std::array<BigInt, 2>>;

template <typename Allowed>
void extend_parity_counts(ParityCounts& counts, std::uint32_t n,
                          const Allowed& allowed) {
  if (counts.empty()) {
    counts.push_back({BigInt(1), BigInt(0)});
  }
  for (std::uint32_t m = static_cast<std::uint32_t>(counts.size()); m <= n; ++m) {
    std::array<BigInt, 2> acc{BigInt(0), BigInt(0)};
    BigInt arrangements = 1;  // (m-1)! / (m-l)! for the current l
    for (std::uint32_t l = 1; l <= m; ++l) {
      if (allowed(l)) {
        const std::uint32_t flip = (l - 1) % 2;
        for (std::uint32_t p = 0; p < 2; ++p) {
          acc[(p + flip) % 2] += arrangements * counts[m - l][p];
        }
      }
      arrangements *= m - l;
    }
    counts.push_back(std::move(acc));
  }
}

const ParityCounts& no_multiple_counts(std::uint32_t b, std::uint32_t n) {
  thread_local std::map<std::uint32_t, ParityCounts> cache;
  ParityCounts& counts = cache[b];
  extend_parity_counts(counts, n,
                       [b](std::uint32_t l) { return l % b != 0; });
  return counts;
}

// Cycle lengths that are multiples of b but not of 2b.
const ParityCounts& odd_block_counts(std::uint32_t b, std::uint32_t n) {
  thread_local std::map<std::uint32_t, ParityCounts> cache;
  ParityCounts& counts = cache[b];
  extend_parity_counts(counts, n,
                       [b](std::uint32_t l) { return l % (2 * b) == b; });
  return counts;
}

BigInt group_order(std::uint32_t n, PermGroup group) {
  BigInt order = factorial(n);
  if (group == PermGroup::alternating && n >= 2) {
    order /= 2;
  }
  return order;
}

std::string kind_name(PermGroup group) {
  return group == PermGroup::symmetric ? "sym" : "alt";
}

ExactRational rational_from_double(double x) {
  if (x == 0.0) {
    return ExactRational(0);
  }
  int exp2 = 0;
  const double mantissa = std::frexp(x, &exp2);
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exp2 -= 53;
  ExactRational value(scaled);
  if (exp2 > 0) {
    value *= ExactRational(pow(BigInt(2), static_cast<unsigned>(exp2)));
  } else if (exp2 < 0) {
    value /= ExactRational(pow(BigInt(2), static_cast<unsigned>(-exp2)));
  }
  return value;
}

std::string format_bound(double bound) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", bound);
  return buf;
}

std::uint32_t support_overlap(const Permutation& a, const Permutation& b) {
  const auto sa = a.support();
  const auto sb = b.support();
  std::uint32_t overlap = 0;
  auto it = sb.begin();
  for (const std::uint32_t point : sa) {
    while (it != sb.end() && *it < point) {
      ++it;
    }
    if (it != sb.end() && *it == point) {
      ++overlap;
    }
  }
  return overlap;
}

// Walks every permutation of Sym_n in lexicographic order and feeds the
// group's elements to the visitor.
template <typename Visitor>
void for_each_element(std::uint32_t n, PermGroup group, const Visitor& visit) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  do {
    Permutation p(images);
    if (group == PermGroup::alternating && !p.is_even()) {
      continue;
    }
    visit(p);
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

BigInt factorial(std::uint32_t n) {
  thread_local std::vector<BigInt> cache{BigInt(1)};
  while (cache.size() <= n) {
    cache.push_back(cache.back() * BigInt(static_cast<std::uint32_t>(cache.size())));
  }
  return cache[n];
}

BigInt binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::vector<CycleTypeClass> cycle_type_classes(std::uint32_t n) {
  if (n > 35) {
    throw std::invalid_argument("cycle_type_classes: enumeration capped at degree 35");
  }
  std::vector<CycleTypeClass> out;
  std::vector<std::uint32_t> parts;
  const BigInt full = factorial(n);
  std::function<void(std::uint32_t, std::uint32_t)> rec =
      [&](std::uint32_t remaining, std::uint32_t max_part) {
        if (remaining == 0) {
          BigInt centralizer = 1;
          for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) {
              ++j;
            }
            const auto mult = static_cast<std::uint32_t>(j - i);
            centralizer *= pow(BigInt(parts[i]), mult) * factorial(mult);
            i = j;
          }
          CycleTypeClass cls;
          cls.partition = parts;
          cls.class_size = full / centralizer;
          cls.even = (n - parts.size()) % 2 == 0;
          out.push_back(std::move(cls));
          return;
        }
        for (std::uint32_t l = std::min(remaining, max_part); l >= 1; --l) {
          parts.push_back(l);
          rec(remaining - l, l);
          parts.pop_back();
        }
      };
  rec(n, n);
  return out;
}

ExactRational t_b_exact(std::uint32_t b, std::uint32_t j) {
  if (b < 1) {
    throw std::invalid_argument("t_b_exact: b must be positive");
  }
  thread_local std::map<std::uint32_t, std::vector<ExactRational>> cache;
  std::vector<ExactRational>& values = cache[b];
  if (values.empty()) {
    values.emplace_back(1);
  }
  for (std::uint32_t m = static_cast<std::uint32_t>(values.size()); m <= j; ++m) {
    ExactRational sum = 0;
    for (std::uint32_t i = 1; i <= m; i += 2) {
      sum += values[m - i];
    }
    values.push_back(sum / (ExactRational(m) * b));
  }
  return values[j];
}

double t_b_lower_bound(std::uint32_t b, std::uint32_t j) {
  if (b < 1 || j < 1) {
    throw std::invalid_argument("t_b_lower_bound: requires b >= 1 and j >= 1");
  }
  const double bd = b;
  return 1.0 / (bd * bd * std::pow(3.0, 1.0 / (2.0 * bd)) *
                std::pow(static_cast<double>(j), 1.0 - 1.0 / (2.0 * bd)));
}

ExactRational no_multiple_cycle_exact(std::uint32_t b, std::uint32_t n,
                                      ParityFilter filter) {
  if (b < 2) {
    throw std::invalid_argument("no_multiple_cycle_exact: b must be at least 2");
  }
  const ParityCounts& counts = no_multiple_counts(b, n);
  BigInt num;
  switch (filter) {
    case ParityFilter::all:
      num = counts[n][0] + counts[n][1];
      break;
    case ParityFilter::even:
      num = counts[n][0];
      break;
    case ParityFilter::odd:
      num = counts[n][1];
      break;
  }
  return ExactRational(num, factorial(n));
}

double no_multiple_cycle_lower_bound(std::uint32_t b, std::uint32_t n) {
  if (b < 2 || n < 1) {
    throw std::invalid_argument("no_multiple_cycle_lower_bound: requires b >= 2 and n >= 1");
  }
  const double bd = b;
  const double nd = n;
  return std::pow(bd, 1.0 / bd) /
         (std::tgamma(1.0 - 1.0 / bd) * std::pow(nd, 1.0 / bd)) *
         (1.0 - 1.0 / nd);
}

std::uint32_t u_b_j_limit(std::uint32_t b, std::uint32_t n) {
  std::uint32_t j = 0;
  while (9 * static_cast<std::uint64_t>(b) * b * (j + 1) * (j + 1) <=
         16 * static_cast<std::uint64_t>(n)) {
    ++j;
  }
  return j;
}

ExactRational u_b_exact(std::uint32_t b, std::uint32_t n, PermGroup group) {
  if (b < 2) {
    throw std::invalid_argument("u_b_exact: b must be at least 2");
  }
  if (n < 9) {
    throw std::invalid_argument("u_b_exact: n must be at least 9");
  }
  const std::uint32_t jm = u_b_j_limit(b, n);
  if (jm == 0) {
    return ExactRational(0);
  }
  const ParityCounts& blocks = odd_block_counts(b, jm * b);
  const ParityCounts& avoid = no_multiple_counts(b, n - b);
  BigInt num = 0;
  for (std::uint32_t j = 1; j <= jm; ++j) {
    const std::uint32_t m = j * b;
    const BigInt ways = binomial(n, m);
    if (group == PermGroup::symmetric) {
      num += ways * (blocks[m][0] + blocks[m][1]) *
             (avoid[n - m][0] + avoid[n - m][1]);
    } else {
      num += ways * (blocks[m][0] * avoid[n - m][0] +
                     blocks[m][1] * avoid[n - m][1]);
    }
  }
  if (group == PermGroup::alternating) {
    num *= 2;
  }
  return ExactRational(num, factorial(n));
}

std::uint32_t even_order_block_size(std::uint32_t n) {
  if (n < 2) {
    throw std::invalid_argument("even_order_block_size: n must be at least 2");
  }
  const double target = std::log(static_cast<double>(n)) / 3.0;
  std::uint32_t block = 1;
  while (static_cast<double>(block) < target) {
    block *= 2;
  }
  return block;
}

bool small_support_class(const std::vector<std::uint32_t>& partition,
                         std::uint32_t n) {
  std::uint32_t max_val = 0;
  for (const std::uint32_t l : partition) {
    std::uint32_t v = 0;
    for (std::uint32_t m = l; m % 2 == 0; m /= 2) {
      ++v;
    }
    max_val = std::max(max_val, v);
  }
  if (max_val == 0) {
    return false;  // odd order
  }
  std::uint64_t moved = 0;
  for (const std::uint32_t l : partition) {
    std::uint32_t v = 0;
    for (std::uint32_t m = l; m % 2 == 0; m /= 2) {
      ++v;
    }
    if (v == max_val) {
      moved += l;
    }
  }
  return 9 * moved * moved <= 16 * static_cast<std::uint64_t>(n);
}

ExactRational small_support_proportion(std::uint32_t n, PermGroup group) {
  if (n < 2) {
    throw std::invalid_argument("small_support_proportion: n must be at least 2");
  }
  BigInt num = 0;
  for (const CycleTypeClass& cls : cycle_type_classes(n)) {
    if (group == PermGroup::alternating && !cls.even) {
      continue;
    }
    if (small_support_class(cls.partition, n)) {
      num += cls.class_size;
    }
  }
  return ExactRational(num, group_order(n, group));
}

double small_support_lower_bound(std::uint32_t n) {
  if (n < 2) {
    throw std::invalid_argument("small_support_lower_bound: n must be at least 2");
  }
  return 1.0 / (13.0 * std::log(static_cast<double>(n)));
}

BigInt involution_count(std::uint32_t n, std::uint32_t k) {
  if (2 * k > n) {
    throw std::invalid_argument("involution_count: requires 2k <= n");
  }
  return factorial(n) /
         (pow(BigInt(2), k) * factorial(k) * factorial(n - 2 * k));
}

ExactRational trip_exact(std::uint32_t n, std::uint32_t k) {
  if (k < 1 || n < 4 * k) {
    throw std::domain_error("trip_exact: requires n >= 4k >= 4");
  }
  const BigInt rest = factorial(n - 2 * k);
  return ExactRational(BigInt(4) * k * k * rest * rest,
                       factorial(n) * factorial(n - 4 * k + 1));
}

ExactRational trip_lower_bound(std::uint32_t n) {
  if (n < 1) {
    throw std::invalid_argument("trip_lower_bound: n must be positive");
  }
  return ExactRational(10, 3 * static_cast<std::uint64_t>(n));
}

ExactRational sigma_conditional(std::uint32_t n, std::uint32_t k) {
  if (k < 1 || n < 4 * k) {
    throw std::domain_error("sigma_conditional: requires n >= 4k >= 4");
  }
  const BigInt one_point = BigInt(2) * k * (n - 2 * k) *
                           involution_count(n - 2 * k - 1, k - 1);
  const BigInt disjoint = involution_count(n - 2 * k, k);
  return ExactRational(one_point, involution_count(n, k) - disjoint);
}

std::uint32_t involution_size_limit(std::uint32_t n) {
  std::uint32_t k = 0;
  while (9 * static_cast<std::uint64_t>(k + 1) * (k + 1) <=
         4 * static_cast<std::uint64_t>(n)) {
    ++k;
  }
  return k;
}

BigInt pre_bolstering_count(std::uint32_t n, std::uint32_t k, PermGroup group) {
  if (k <= 6 || k > n) {
    return 0;
  }
  BigInt count = BigInt(12) * factorial(n - 3) * (k - 6);
  if (group == PermGroup::alternating) {
    count /= 2;
  }
  return count;
}

ExactRational pre_bolstering_aggregate(std::uint32_t n, PermGroup group) {
  BigInt num = 0;
  for (std::uint32_t k = 7; k <= n; ++k) {
    num += pre_bolstering_count(n, k, group);
  }
  return ExactRational(num, group_order(n, group));
}

ExactRational pre_bolstering_lower_bound(std::uint32_t n) {
  if (n < 1) {
    throw std::invalid_argument("pre_bolstering_lower_bound: n must be positive");
  }
  return ExactRational(2, 5 * static_cast<std::uint64_t>(n));
}

ExactRational common_fixed_point_prob(std::uint32_t n, std::uint32_t k,
                                      std::uint32_t t) {
  if (k < 1 || k >= n || t < 1) {
    throw std::invalid_argument(
        "common_fixed_point_prob: requires 1 <= k < n and t >= 1");
  }
  ExactRational total = 0;
  BigInt miss_num = 1;  // prod (n - k - i)
  BigInt miss_den = 1;  // prod (n - i)
  for (std::uint32_t j = 0; j + k + 1 <= n; ++j) {
    miss_num *= n - k - j;
    miss_den *= n - j;
    const ExactRational term(binomial(n, j + 1) * pow(miss_num, t),
                             pow(miss_den, t));
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

std::uint32_t common_fixed_point_rounds(std::uint32_t n, double alpha,
                                        double epsilon) {
  if (n < 2 || !(alpha > 0.0 && alpha < 1.0) ||
      !(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument(
        "common_fixed_point_rounds: requires n >= 2 and alpha, epsilon in (0,1)");
  }
  const double rounds = (std::log(static_cast<double>(n)) + std::log(1.0 / epsilon)) /
                        std::log(1.0 / (1.0 - alpha));
  return static_cast<std::uint32_t>(std::ceil(rounds));
}

std::uint64_t chernoff_sample_size(double p_lower_bound, double delta,
                                   double epsilon) {
  if (!(p_lower_bound > 0.0 && p_lower_bound < 1.0) ||
      !(delta > 0.0 && delta < 1.0) || !(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument(
        "chernoff_sample_size: requires p, delta, epsilon in (0,1)");
  }
  const double rate = delta * delta * p_lower_bound / 2.0;
  const double estimate = std::log(1.0 / epsilon) / rate;
  std::uint64_t trials =
      estimate > 2.0 ? static_cast<std::uint64_t>(std::floor(estimate)) - 1 : 0;
  while (std::exp(-rate * static_cast<double>(trials)) > epsilon) {
    ++trials;
  }
  return trials;
}

BigInt enumerate_count(std::uint32_t n, PermGroup group,
                       const std::function<bool(const Permutation&)>& predicate) {
  if (n < 1 || n > 11) {
    throw std::invalid_argument("enumerate_count: full enumeration capped at degree 11");
  }
  BigInt count = 0;
  for_each_element(n, group, [&](const Permutation& p) {
    if (predicate(p)) {
      ++count;
    }
  });
  return count;
}

ExactRational enumerate_proportion(
    std::uint32_t n, PermGroup group,
    const std::function<bool(const Permutation&)>& predicate) {
  return ExactRational(enumerate_count(n, group, predicate),
                       group_order(n, group));
}

ExactRational enumerate_cycle_type_proportion(
    std::uint32_t n, PermGroup group,
    const std::function<bool(const CycleTypeClass&)>& predicate) {
  BigInt num = 0;
  for (const CycleTypeClass& cls : cycle_type_classes(n)) {
    if (group == PermGroup::alternating && !cls.even) {
      continue;
    }
    if (predicate(cls)) {
      num += cls.class_size;
    }
  }
  return ExactRational(num, group_order(n, group));
}

std::optional<std::uint32_t> pre_bolstering_span(const Permutation& r,
                                                 const Permutation& c) {
  if (!c.is_cycle_of_length(3)) {
    throw std::invalid_argument("pre_bolstering_span: c must be a 3-cycle");
  }
  const std::vector<std::uint32_t> supp = c.support();
  const auto in_support = [&supp](std::uint32_t point) {
    return point == supp[0] || point == supp[1] || point == supp[2];
  };
  std::vector<std::vector<std::uint32_t>> meeting;
  std::uint32_t covered = 0;
  for (auto& cycle : r.cycles()) {
    std::uint32_t hits = 0;
    for (const std::uint32_t point : cycle) {
      hits += in_support(point) ? 1 : 0;
    }
    if (hits > 0) {
      covered += hits;
      meeting.push_back(std::move(cycle));
    }
  }
  if (covered != 3) {
    return std::nullopt;  // some support point is fixed by r
  }
  if (meeting.size() == 2) {
    const auto hits = [&](const std::vector<std::uint32_t>& cycle) {
      std::uint32_t h = 0;
      for (const std::uint32_t point : cycle) {
        h += in_support(point) ? 1 : 0;
      }
      return h;
    };
    const std::vector<std::uint32_t>& pair_cycle =
        hits(meeting[0]) == 2 ? meeting[0] : meeting[1];
    const std::vector<std::uint32_t>& single_cycle =
        hits(meeting[0]) == 2 ? meeting[1] : meeting[0];
    if (hits(pair_cycle) != 2 || pair_cycle.size() < 4 ||
        single_cycle.size() < 3) {
      return std::nullopt;
    }
    // The two support points must be adjacent along the cycle.
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < pair_cycle.size(); ++i) {
      if (in_support(pair_cycle[i])) {
        positions.push_back(i);
      }
    }
    const std::size_t len = pair_cycle.size();
    const std::size_t gap = (positions[1] - positions[0]) % len;
    if (gap != 1 && gap != len - 1) {
      return std::nullopt;
    }
    return static_cast<std::uint32_t>(pair_cycle.size() + single_cycle.size());
  }
  if (meeting.size() == 1) {
    const std::vector<std::uint32_t>& cycle = meeting[0];
    const std::size_t len = cycle.size();
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < len; ++i) {
      if (in_support(cycle[i])) {
        positions.push_back(i);
      }
    }
    const std::size_t g0 = positions[1] - positions[0];
    const std::size_t g1 = positions[2] - positions[1];
    const std::size_t g2 = len - positions[2] + positions[0];
    std::array<std::size_t, 3> gaps{g0, g1, g2};
    std::sort(gaps.begin(), gaps.end());
    if (gaps[0] != 1 || gaps[1] < 3) {
      return std::nullopt;
    }
    return static_cast<std::uint32_t>(len);
  }
  return std::nullopt;
}

bool powers_to_small_involution(const Permutation& x, std::uint32_t n) {
  const BigInt order = x.order();
  if (order % 2 != 0) {
    return false;
  }
  const Permutation half = x.power((order / 2).convert_to<long long>());
  const std::uint64_t moved = half.support_size();
  return 9 * moved * moved <= 16 * static_cast<std::uint64_t>(n);
}

bool is_k_involution(const Permutation& x, std::uint32_t k) {
  if (k < 1 || x.is_identity()) {
    return false;
  }
  return x.support_size() == 2 * static_cast<std::size_t>(k) &&
         x.compose(x).is_identity();
}

bool shares_one_moved_point(const Permutation& a, const Permutation& b) {
  return support_overlap(a, b) == 1;
}

bool product_square_is_three_cycle(const Permutation& a, const Permutation& b) {
  const Permutation product = a.compose(b);
  return product.compose(product).is_cycle_of_length(3);
}

InvolutionMeetStats involution_meet_stats(std::uint32_t n, std::uint32_t k) {
  if (k < 1 || 2 * k > n) {
    throw std::invalid_argument("involution_meet_stats: requires 1 <= 2k <= n");
  }
  if (n > 11) {
    throw std::invalid_argument("involution_meet_stats: full enumeration capped at degree 11");
  }
  std::vector<std::vector<std::uint32_t>> transpositions;
  for (std::uint32_t i = 0; i < k; ++i) {
    transpositions.push_back({2 * i + 1, 2 * i + 2});
  }
  const Permutation t0 = Permutation::from_cycles(n, transpositions);
  InvolutionMeetStats stats;
  for_each_element(n, PermGroup::symmetric, [&](const Permutation& u) {
    if (!is_k_involution(u, k)) {
      return;
    }
    ++stats.involutions;
    const std::uint32_t overlap = support_overlap(t0, u);
    if (overlap == 1) {
      ++stats.share_one_point;
    }
    if (overlap == 0) {
      ++stats.disjoint_support;
    }
    if (t0.compose(u) != u.compose(t0)) {
      ++stats.noncommuting;
      if (product_square_is_three_cycle(t0, u)) {
        ++stats.three_cycle_yield;
      }
    }
  });
  return stats;
}

std::vector<BigInt> pre_bolstering_span_counts(std::uint32_t n,
                                               PermGroup group) {
  if (n < 7 || n > 11) {
    throw std::invalid_argument(
        "pre_bolstering_span_counts: full enumeration capped at degrees 7..11");
  }
  const Permutation c = Permutation::from_cycles(n, {{1, 2, 3}});
  std::vector<BigInt> counts(n + 1, BigInt(0));
  for_each_element(n, group, [&](const Permutation& r) {
    const auto span = pre_bolstering_span(r, c);
    if (span) {
      ++counts[*span];
    }
  });
  return counts;
}

bool meets_lower_bound(const ExactRational& value, double bound) {
  if (!(bound > 0.0)) {
    return value >= 0;
  }
  ExactRational inflated = rational_from_double(bound);
  inflated *= ExactRational(1000000001, 1000000000);
  return value >= inflated;
}

bool BoundTable::all_pass() const {
  for (const BoundRow& row : rows) {
    if (!row.flagged && !row.pass) {
      return false;
    }
  }
  return true;
}

BoundTable small_support_table(std::uint32_t n_min, std::uint32_t n_max) {
  BoundTable table;
  table.name = "small-support";
  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    for (const PermGroup group : {PermGroup::symmetric, PermGroup::alternating}) {
      BoundRow row;
      row.n = n;
      row.param = "kind=" + kind_name(group);
      row.exact = small_support_proportion(n, group);
      row.bound = small_support_lower_bound(n);
      row.pass = meets_lower_bound(row.exact, row.bound);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

BoundTable t_b_table(const std::vector<std::uint32_t>& bs,
                     std::uint32_t max_points) {
  BoundTable table;
  table.name = "tb";
  for (const std::uint32_t b : bs) {
    for (std::uint32_t j = 1; j * b <= max_points; ++j) {
      BoundRow row;
      row.n = j * b;
      row.param = "b=" + std::to_string(b) + ";j=" + std::to_string(j);
      row.exact = t_b_exact(b, j);
      row.bound = t_b_lower_bound(b, j);
      row.pass = meets_lower_bound(row.exact, row.bound);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

BoundTable no_multiple_cycle_table(const std::vector<std::uint32_t>& bs,
                                   std::uint32_t n_max) {
  BoundTable table;
  table.name = "no-multiple-cycle";
  for (const std::uint32_t b : bs) {
    for (std::uint32_t n = 2; n <= n_max; ++n) {
      BoundRow row;
      row.n = n;
      row.param = "b=" + std::to_string(b);
      row.exact = no_multiple_cycle_exact(b, n, ParityFilter::all);
      row.bound = no_multiple_cycle_lower_bound(b, n);
      row.pass = meets_lower_bound(row.exact, row.bound);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

BoundTable u_b_table(std::uint32_t n_min, std::uint32_t n_max) {
  BoundTable table;
  table.name = "ub";
  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    if (n >= 404) {
      const std::uint32_t block = even_order_block_size(n);
      BoundRow row;
      row.n = n;
      row.param = "b=" + std::to_string(block) + ";kind=sym";
      row.exact = u_b_exact(block, n, PermGroup::symmetric);
      row.bound = 1.0 / (16.0 * std::log(static_cast<double>(n)));
      row.pass = meets_lower_bound(row.exact, row.bound);
      table.rows.push_back(std::move(row));
    }
    for (const std::uint32_t b : {4u, 8u}) {
      if (n < 9 || u_b_j_limit(b, n) == 0) {
        continue;
      }
      const ExactRational sym_value = u_b_exact(b, n, PermGroup::symmetric);
      const ExactRational alt_value = u_b_exact(b, n, PermGroup::alternating);
      const ExactRational ratio_bound =
          sym_value * ExactRational(b - 2, b - 1);
      BoundRow row;
      row.n = n;
      row.param = "b=" + std::to_string(b) + ";kind=alt";
      row.exact = alt_value;
      row.bound = ratio_bound.convert_to<double>();
      row.pass = alt_value >= ratio_bound;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

BoundTable trip_table(std::uint32_t n_min, std::uint32_t n_max) {
  BoundTable table;
  table.name = "trip";
  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    for (std::uint32_t k = 1; k <= involution_size_limit(n); ++k) {
      if (n < 4 * k) {
        continue;
      }
      BoundRow row;
      row.n = n;
      row.param = "k=" + std::to_string(k);
      row.exact = trip_exact(n, k);
      const ExactRational bound = trip_lower_bound(n);
      row.bound = bound.convert_to<double>();
      row.pass = row.exact >= bound;
      row.flagged = (n == 9 && k == 2);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

BoundTable sigma_table(std::uint32_t n_min, std::uint32_t n_max) {
  BoundTable table;
  table.name = "sigma";
  const ExactRational third(1, 3);
  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    for (std::uint32_t k = 1; k <= involution_size_limit(n); ++k) {
      if (n < 4 * k) {
        continue;
      }
      BoundRow row;
      row.n = n;
      row.param = "k=" + std::to_string(k);
      row.exact = sigma_conditional(n, k);
      row.bound = third.convert_to<double>();
      row.pass = row.exact >= third;
      row.flagged = (n == 9 && k == 2);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

BoundTable pre_bolstering_table(std::uint32_t n_min, std::uint32_t n_max) {
  BoundTable table;
  table.name = "prebolster";
  for (std::uint32_t n = std::max(n_min, 7u); n <= n_max; ++n) {
    for (const PermGroup group : {PermGroup::symmetric, PermGroup::alternating}) {
      if (n <= 11) {
        const std::vector<BigInt> observed = pre_bolstering_span_counts(n, group);
        const BigInt order = group_order(n, group);
        for (std::uint32_t k = 7; k <= n; ++k) {
          const BigInt expected = pre_bolstering_count(n, k, group);
          BoundRow row;
          row.n = n;
          row.param = "k=" + std::to_string(k) + ";kind=" + kind_name(group);
          row.exact = ExactRational(expected, order);
          row.bound = ExactRational(observed[k], order).convert_to<double>();
          row.pass = expected == observed[k];
          table.rows.push_back(std::move(row));
        }
      }
      BoundRow aggregate;
      aggregate.n = n;
      aggregate.param = "aggregate;kind=" + kind_name(group);
      aggregate.exact = pre_bolstering_aggregate(n, group);
      const ExactRational bound = pre_bolstering_lower_bound(n);
      aggregate.bound = bound.convert_to<double>();
      aggregate.pass = aggregate.exact >= bound;
      table.rows.push_back(std::move(aggregate));
    }
  }
  return table;
}

BoundTable common_fixed_point_table() {
  BoundTable table;
  table.name = "common-fp";
  struct Case {
    std::uint32_t n;
    std::uint32_t k;
    double alpha;
    double epsilon;
    ExactRational epsilon_exact;
  };
  const std::vector<Case> cases = {
      {20, 14, kCycleFractionSevenTenths, 0.1, ExactRational(1, 10)},
      {50, 35, kCycleFractionSevenTenths, 0.05, ExactRational(1, 20)},
      {100, 75, kCycleFractionThreeQuarters, 0.05, ExactRational(1, 20)},
  };
  for (const Case& c : cases) {
    const std::uint32_t rounds =
        common_fixed_point_rounds(c.n, c.alpha, c.epsilon);
    BoundRow row;
    row.n = c.n;
    row.param = "k=" + std::to_string(c.k) + ";t=" + std::to_string(rounds);
    row.exact = common_fixed_point_prob(c.n, c.k, rounds);
    row.bound = c.epsilon;
    row.pass = row.exact <= c.epsilon_exact;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_csv(const BoundTable& table) {
  std::ostringstream os;
  os << "n,param,exact,bound,status\n";
  for (const BoundRow& row : table.rows) {
    os << row.n << ',' << row.param << ',' << numerator(row.exact) << '/'
       << denominator(row.exact) << ',' << format_bound(row.bound) << ','
       << (row.flagged ? "flagged" : row.pass ? "pass" : "fail") << '\n';
  }
  return os.str();
}

}  // namespace snap
