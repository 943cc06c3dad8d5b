#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "snap/perm.hpp"

namespace snap {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Which of the two target group families a proportion refers to.
enum class PermGroup { symmetric, alternating };

/// Parity restriction applied when counting permutations.  Proportions with
/// an `even` or `odd` filter are still taken relative to the full symmetric
/// group, so the two filtered values sum to the unfiltered one.
enum class ParityFilter { all, even, odd };

/// Slack parameters for the Chernoff-style sample-size bounds used by the
/// search schedules.
inline constexpr double kChernoffSlackHalf = 0.5;
inline constexpr double kChernoffSlackSixteenTwentyFifths = 16.0 / 25.0;

/// Cycle-length fractions at which the long-cycle phase guarantees kick in.
inline constexpr double kCycleFractionThreeQuarters = 0.75;
inline constexpr double kCycleFractionSevenTenths = 0.7;

/// n! as an exact integer.
BigInt factorial(std::uint32_t n);

/// Binomial coefficient C(n, k) as an exact integer (0 when k > n).
BigInt binomial(std::uint32_t n, std::uint32_t k);

/// Conjugacy class of the symmetric group described by its cycle type.
struct CycleTypeClass {
  /// Cycle lengths including fixed points, weakly decreasing, summing to n.
  std::vector<std::uint32_t> partition;
  /// Number of elements of this cycle type: n! / prod_l (l^{a_l} * a_l!).
  BigInt class_size;
  /// True when the class consists of even permutations.
  bool even = true;
};

/// All conjugacy classes of Sym_n.  Throws std::invalid_argument for n > 35
/// (the cap of the cycle-type enumeration oracle).
std::vector<CycleTypeClass> cycle_type_classes(std::uint32_t n);

// ---------------------------------------------------------------------------
// Exact proportions
// ---------------------------------------------------------------------------

/// Proportion t_b(j*b) of permutations of Sym_{j*b} all of whose cycle
/// lengths are multiples of b but not of 2b, via the recursion
/// m*b*t_b(m*b) = sum over odd i <= m of t_b((m-i)*b), with t_b(0) = 1.
/// Requires b >= 1.
ExactRational t_b_exact(std::uint32_t b, std::uint32_t j);

/// Closed-form lower bound (b^2 * 3^{1/(2b)} * j^{1-1/(2b)})^{-1} for
/// t_b(j*b).  Requires j >= 1.
double t_b_lower_bound(std::uint32_t b, std::uint32_t j);

/// Proportion of permutations of Sym_n with no cycle length divisible by b,
/// optionally restricted to one permutation parity.  Computed by an exact
/// cycle-removal recursion that tracks parity.  Requires b >= 2.
ExactRational no_multiple_cycle_exact(std::uint32_t b, std::uint32_t n,
                                      ParityFilter filter = ParityFilter::all);

/// Closed-form lower bound (b^{1/b} / (Gamma(1-1/b) * n^{1/b})) * (1 - 1/n)
/// for the all-parity value above.  Requires n >= 1.
double no_multiple_cycle_lower_bound(std::uint32_t b, std::uint32_t n);

/// Largest j with 9*(j*b)^2 <= 16*n, i.e. floor(4*sqrt(n)/(3*b)) computed
/// in exact integer arithmetic.  May be 0 (empty range).
std::uint32_t u_b_j_limit(std::uint32_t b, std::uint32_t n);

/// Proportion of elements of Sym_n (or Alt_n) that have j*b points in cycles
/// of length divisible by b but not by 2b and all remaining points in cycles
/// of length not divisible by b, for some 1 <= j <= u_b_j_limit(b, n).
/// These are the elements whose half-order power is an involution moving at
/// most 4*sqrt(n)/3 points when b is the right power of two.  The
/// alternating value is computed with a parity-resolved double DP.
/// Requires b >= 2 and n >= 9; returns 0 when the j-range is empty.
ExactRational u_b_exact(std::uint32_t b, std::uint32_t n, PermGroup group);

/// Smallest power of two >= ln(n)/3: the block size at which the sym value
/// of u_b_exact is guaranteed to be at least 1/(16 ln n) for n >= 404.
std::uint32_t even_order_block_size(std::uint32_t n);

/// Proportion of elements x of even order with |supp(x^{|x|/2})| bounded by
/// 4*sqrt(n)/3 (checked as 9*s^2 <= 16*n in integers), computed by
/// enumerating all cycle types with class sizes and parities.
/// Requires n >= 2.
ExactRational small_support_proportion(std::uint32_t n, PermGroup group);

/// Lower bound 1/(13 ln n) for the proportion above, valid for n >= 9.
double small_support_lower_bound(std::uint32_t n);

/// Number of involutions of Sym_n moving exactly 2k points:
/// n! / (2^k * k! * (n-2k)!).  Requires 2k <= n.
BigInt involution_count(std::uint32_t n, std::uint32_t k);

/// Proportion of k-involutions sharing exactly one moved point with a fixed
/// k-involution: 4k^2 * (n-2k)!^2 / (n! * (n-4k+1)!).  Throws
/// std::domain_error unless n >= 4k >= 4.
ExactRational trip_exact(std::uint32_t n, std::uint32_t k);

/// Lower bound 10/(3n) claimed for trip_exact over 1 <= k <= 2*sqrt(n)/3.
ExactRational trip_lower_bound(std::uint32_t n);

/// Formula lower bound |T| / (inv(n,k) - |C|) for the conditional
/// probability that a non-commuting conjugate of a k-involution shares
/// exactly one moved point with it (and then the squared product is a
/// 3-cycle), where |T| = 2k(n-2k) * inv(n-2k-1, k-1) counts the
/// one-point-overlap conjugates and |C| = inv(n-2k, k) the disjoint ones.
/// Throws std::domain_error unless n >= 4k >= 4.
ExactRational sigma_conditional(std::uint32_t n, std::uint32_t k);

/// Largest k with 9*k^2 <= 4*n, i.e. floor(2*sqrt(n)/3): the involution
/// sizes covered by the trip/sigma bounds.
std::uint32_t involution_size_limit(std::uint32_t n);

/// Number of elements r whose cycles through the support of a fixed 3-cycle
/// form the two-chain pattern the bolstering search keys on, with combined
/// chain length k: 12*(n-3)!*(k-6) in Sym_n and half that in Alt_n.
/// Returns 0 for k <= 6 or k > n.
BigInt pre_bolstering_count(std::uint32_t n, std::uint32_t k, PermGroup group);

/// Sum over k of pre_bolstering_count(n, k, group) / |G|; equals
/// 6(n-5)(n-6) / (n(n-1)(n-2)) and is the same for both kinds.
ExactRational pre_bolstering_aggregate(std::uint32_t n, PermGroup group);

/// Lower bound 2/(5n) for the aggregate above, tight at n = 7.
ExactRational pre_bolstering_lower_bound(std::uint32_t n);

/// Probability that t independent uniform k-subsets of {1..n} all miss some
/// common point, by inclusion-exclusion:
///   sum_{j=0}^{n-k-1} (-1)^j * C(n, j+1) * (prod_{i=0}^{j} (n-k-i)/(n-i))^t.
/// Requires 1 <= k < n and t >= 1.
ExactRational common_fixed_point_prob(std::uint32_t n, std::uint32_t k,
                                      std::uint32_t t);

/// Number of draws t at which the probability above is guaranteed to be at
/// most epsilon whenever k >= alpha*n:
///   ceil((ln n + ln(1/epsilon)) / ln(1/(1-alpha))).
std::uint32_t common_fixed_point_rounds(std::uint32_t n, double alpha,
                                        double epsilon);

/// Least T with exp(-delta^2 * p * T / 2) <= epsilon, for success
/// probability at least p per trial.  Requires 0 < p, delta, epsilon < 1.
std::uint64_t chernoff_sample_size(double p_lower_bound, double delta,
                                   double epsilon);

// ---------------------------------------------------------------------------
// Brute-force enumeration oracles
// ---------------------------------------------------------------------------

/// Streams every element of Sym_n (or the even ones for Alt_n) and counts
/// those satisfying the predicate.  Throws std::invalid_argument for n < 1
/// or n > 11.
BigInt enumerate_count(std::uint32_t n, PermGroup group,
                       const std::function<bool(const Permutation&)>& predicate);

/// enumerate_count divided by the group order.
ExactRational enumerate_proportion(
    std::uint32_t n, PermGroup group,
    const std::function<bool(const Permutation&)>& predicate);

/// Sums class sizes of the cycle types satisfying the predicate (even
/// classes only for Alt_n) divided by the group order.  Throws
/// std::invalid_argument for n > 35.
ExactRational enumerate_cycle_type_proportion(
    std::uint32_t n, PermGroup group,
    const std::function<bool(const CycleTypeClass&)>& predicate);

/// Combined length of the cycles of r through the support of the 3-cycle c
/// when they form the two-chain pattern: either one cycle of length >= 4
/// covering two support points adjacently plus a separate cycle of length
/// >= 3 through the third, or a single cycle visiting all three support
/// points with one gap of 1 and the other two gaps >= 3.  Returns nullopt
/// for any other shape.  Throws std::invalid_argument unless c is a 3-cycle.
std::optional<std::uint32_t> pre_bolstering_span(const Permutation& r,
                                                 const Permutation& c);

/// Element-wise form of the small-support event: x has even order and its
/// half-order power moves at most 4*sqrt(n)/3 points.
bool powers_to_small_involution(const Permutation& x, std::uint32_t n);

/// Cycle-type form of the same event: the type has even lcm, and the cycles
/// of maximal 2-adic valuation cover at most 4*sqrt(n)/3 points.
bool small_support_class(const std::vector<std::uint32_t>& partition,
                         std::uint32_t n);

/// True when x is a product of exactly k disjoint transpositions.
bool is_k_involution(const Permutation& x, std::uint32_t k);

/// True when the supports of a and b share exactly one point.
bool shares_one_moved_point(const Permutation& a, const Permutation& b);

/// True when (a*b)^2 is a 3-cycle.
bool product_square_is_three_cycle(const Permutation& a, const Permutation& b);

/// Exhaustive statistics of the k-involutions of Sym_n against the fixed
/// k-involution t0 = (1,2)(3,4)...(2k-1,2k), by full enumeration (n <= 11).
struct InvolutionMeetStats {
  BigInt involutions;       ///< all k-involutions
  BigInt noncommuting;      ///< those not commuting with t0
  BigInt three_cycle_yield; ///< non-commuting u with (t0*u)^2 a 3-cycle
  BigInt share_one_point;   ///< |supp u ∩ supp t0| = 1 (whether or not commuting)
  BigInt disjoint_support;  ///< supp u ∩ supp t0 empty
};
InvolutionMeetStats involution_meet_stats(std::uint32_t n, std::uint32_t k);

/// result[k] = number of group elements with pre_bolstering_span == k for
/// c = (1,2,3), by full enumeration (7 <= n <= 11).  Index range [0, n].
std::vector<BigInt> pre_bolstering_span_counts(std::uint32_t n,
                                               PermGroup group);

// ---------------------------------------------------------------------------
// Bound verification tables
// ---------------------------------------------------------------------------

/// True when the exact value stays at or above the floating-point lower
/// bound even after inflating the bound by a relative 1e-9 margin, so
/// rounding error in the bound can never produce a spurious pass.
bool meets_lower_bound(const ExactRational& value, double bound);

/// One row of a bound-verification table.
struct BoundRow {
  std::uint32_t n = 0;      ///< degree the row refers to
  std::string param;        ///< remaining coordinates, e.g. "b=2,j=5" or "k=2"
  ExactRational exact;      ///< exactly computed value
  double bound = 0.0;       ///< bound the value is compared against
  bool pass = false;        ///< comparison verdict
  bool flagged = false;     ///< boundary-disputed row: reported, not enforced
};

struct BoundTable {
  std::string name;
  std::vector<BoundRow> rows;
  /// True when every row passes, ignoring flagged rows.
  bool all_pass() const;
};

/// small_support_proportion vs 1/(13 ln n) for both kinds.
BoundTable small_support_table(std::uint32_t n_min, std::uint32_t n_max);

/// t_b_exact vs its closed-form lower bound for each b, over j*b <= max_points.
BoundTable t_b_table(const std::vector<std::uint32_t>& bs,
                     std::uint32_t max_points);

/// no_multiple_cycle_exact (all parities) vs the Gamma-function bound.
BoundTable no_multiple_cycle_table(const std::vector<std::uint32_t>& bs,
                                   std::uint32_t n_max);

/// Alternating-vs-symmetric comparison rows for b in {4, 8} (exact check
/// alt >= (1 - 1/(b-1)) * sym), plus sym rows against 1/(16 ln n) for any
/// n >= 404 in range at the prescribed block size.
BoundTable u_b_table(std::uint32_t n_min, std::uint32_t n_max);

/// trip_exact vs 10/(3n) over 1 <= k <= involution_size_limit(n).  The row
/// (n, k) = (9, 2) is flagged: the formula value 20/63 sits below the bound
/// while the quantities the algorithm actually consumes pass (see the sigma
/// table and the enumeration stats).
BoundTable trip_table(std::uint32_t n_min, std::uint32_t n_max);

/// sigma_conditional vs 1/3 over the same grid.  The row (9, 2) is flagged:
/// the formula lower bound 120/363 sits just below 1/3, while the true
/// conditional proportion 7/17 (by enumeration) passes.
BoundTable sigma_table(std::uint32_t n_min, std::uint32_t n_max);

/// For n <= 11: formula-vs-enumeration rows per chain length k (bound column
/// holds the enumerated proportion); for every n: aggregate rows vs 2/(5n).
BoundTable pre_bolstering_table(std::uint32_t n_min, std::uint32_t n_max);

/// The prescribed common-fixed-point checks: (n, alpha, epsilon) in
/// {(20, 7/10, 1/10), (50, 7/10, 1/20), (100, 3/4, 1/20)} at
/// t = common_fixed_point_rounds(n, alpha, epsilon), value <= epsilon.
BoundTable common_fixed_point_table();

/// CSV rendering: header "n,param,exact,bound,status" with exact as "p/q"
/// and status one of pass|fail|flagged.
std::string to_csv(const BoundTable& table);

}  // namespace snap
