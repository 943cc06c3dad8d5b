#ifndef SNAP_RECOGNIZER_HPP
#define SNAP_RECOGNIZER_HPP

#include <optional>
#include <vector>

#include "snap/bbx.hpp"

namespace snap {

/// Sample sizes for the involution-based 3-cycle candidate search with
/// failure budget epsilon and degree bound N.
struct CandidateParams {
  std::uint64_t draws;         ///< random elements raised to the odd-part exponent
  std::uint64_t target;        ///< non-commuting conjugates kept per involution
  std::uint64_t per_draw_cap;  ///< conjugate trials allowed per involution

  static CandidateParams for_search(double epsilon, unsigned N);
};

/// Sample sizes for the bolstering-element search.
struct BolsterParams {
  std::uint64_t draws;  ///< random elements tested for the pre-bolstering property
  std::uint64_t keep;   ///< pre-bolstering elements retained

  static BolsterParams for_search(double epsilon, unsigned N);
};

/// Result of the candidate search: either a list of putative 3-cycles (in
/// construction order, at most draws*target of them) or a certificate that
/// the group contains an element order impossible for degree <= N, proving
/// it is not an alternating or symmetric group of any such degree.
struct CandidateResult {
  enum class Status { candidates, impossible };
  Status status = Status::candidates;
  std::vector<Element> elements;
};

/// Searches for 3-cycles among squares of products of commuting-filtered
/// involution conjugates.  Randomness comes entirely from the oracle.
CandidateResult three_cycle_candidates(GroupOracle& G, double epsilon, unsigned N);

/// True iff r satisfies the commutation criterion characterizing
/// pre-bolstering elements with respect to the 3-cycle c:
/// [c^r, c] != 1, c^{(r^2)} not in {c, c^2}, and [c, c^{(r^2)}] = 1.
bool is_pre_bolstering(GroupOracle& G, const Element& c, const Element& r);

/// Draws random elements, keeps pre-bolstering ones, and converts each
/// kept r into the bolstering element cr or c^2 r, deciding the
/// orientation of c from the cycle shape of a derived probe element.
/// Returns at most BolsterParams::keep elements; fewer when the draw
/// budget runs out first.
std::vector<Element> bolstering_elements(GroupOracle& G, const Element& c, double epsilon,
                                         unsigned N);

/// Cycle-shape facts about a bolstering element x with respect to c,
/// derived from order-5 and commutation tests on conjugates of c.  Writing
/// x as two chains of lengths alpha and beta hanging off supp c:
/// m = min(alpha, beta); the remaining flags describe the comparison of
/// alpha and beta and whether the chains sit in one cycle of x or two.
/// first_form means two separate cycles; it is meaningful only when
/// alpha != beta, and alpha_gt_beta only when |alpha - beta| >= 2.
struct CycleProbe {
  std::uint64_t m = 0;
  bool alpha_eq_beta = false;
  bool diff_one = false;
  bool first_form = false;
  bool alpha_gt_beta = false;
};

/// Probes the chain lengths of x relative to c.  Empty when the chain
/// search would reach N/2, which cannot happen for genuine input of
/// degree <= N.
std::optional<CycleProbe> cycle_structure_probe(GroupOracle& G, const Element& c,
                                                const Element& x, unsigned N);

/// A cycle built from a bolstering element, together with its length.
struct BuiltCycle {
  std::uint64_t length = 0;
  Element cycle;
};

/// Multiplies conjugates of c along the chains of x into a single cycle
/// of odd length matching c; on genuine input the result is a
/// length-cycle through supp c.  Empty when a chain search hits N/2.
std::optional<BuiltCycle> build_cycle(GroupOracle& G, const Element& c, const Element& x,
                                      unsigned N);

/// Runs the bolstering search with budget epsilon/2 and builds a cycle
/// from every bolstering element found, returning the longest.  Empty
/// when fewer than BolsterParams::keep bolstering elements were found or
/// any build fails.
std::optional<BuiltCycle> construct_long_cycle(GroupOracle& G, const Element& c, double epsilon,
                                               unsigned N);

/// Repeated-query tester for whether the distinguished point of a
/// matching pair (g, c) -- the unique common moved point of c and
/// c^{(g^2)} -- is fixed by a query element.  The constructor builds the
/// commutation test sets once; each query then costs a constant number
/// of group operations.
class PointProbe {
public:
  PointProbe(GroupOracle& G, const Element& g, const Element& c);

  /// True iff no test element built from r commutes with two distinct
  /// members of either commutation test set.
  bool fixes_distinguished_point(const Element& r) const;

private:
  GroupOracle* m_G;
  Element m_c;
  Element m_x2_prefix;          // g^2
  Element m_x3_prefix;          // g^2 c^{(g^3)} c^{(g^4)}
  std::vector<Element> m_h1;    // first commutation test set, deduplicated
  std::vector<Element> m_h2;    // second commutation test set, deduplicated
};

/// One-shot form of PointProbe: true iff the unique common moved point of
/// c and c^{(g^2)} is fixed by r (for genuine matching input).
bool is_fixed_point(GroupOracle& G, const Element& g, const Element& c, const Element& r);

/// Conjugates r so that, in the coordinates where g = (1,...,k) and
/// c = (1,2,3), the result fixes 1 and 2 and moves 3.  Scans which of the
/// k cycle points r fixes and picks the conjugator from a fixed table.
/// Empty when r fixes fewer than 2 or all of the k points, which signals
/// an unusable query element.
std::optional<Element> adjust_cycle(GroupOracle& G, const Element& g, const Element& c,
                                    const Element& r, std::uint64_t k);

/// Output of append_points: the possibly extended cycle, the parked
/// half-pair storage element (identity when nothing is parked), and the
/// new length.
struct AppendResult {
  Element g;
  Element s;
  std::uint64_t k = 0;
};

/// Walks the points of r (a cycle fixing 1 and 2 and moving 3 in bundle
/// coordinates) and appends those outside supp g to g in pairs; an
/// unpaired point is parked in the storage element s until a second one
/// arrives.  k0 bounds the walk length.
AppendResult append_points(GroupOracle& G, const Element& g, const Element& c, const Element& r,
                           const Element& s, std::uint64_t k, std::uint64_t k0);

/// A certified pair (c, g) with g a length-cycle matching the 3-cycle c,
/// in whose coordinates c = (1,2,3) and g = (1,...,length).  storage, when
/// present, is a parked 3-cycle (1,2,b) whose extra point b extends the
/// coordinates to length+1 points.  Retained by the recognizer for
/// isomorphism evaluation.
struct MatchingCycleBundle {
  Element three_cycle;
  Element cycle;
  std::uint64_t length = 0;
  std::optional<Element> storage;
};

/// Output of the standard-generator construction: elements mapping to the
/// standard generator pair of Alt_degree under the isomorphism determined
/// by bundle, plus the pre-finalization bundle itself.
struct StandardGeneratorsResult {
  Element s;
  Element t;
  std::uint64_t degree = 0;
  MatchingCycleBundle bundle;
};

/// Grows the matching pair (g, c) of length k to cover the whole permuted
/// domain by absorbing random conjugates of g c^2, then finalizes the
/// standard generator pair and verifies the defining relators of
/// Alt_degree.  Empty when a conjugate cannot be adjusted, the degree
/// exceeds N, or the relator check fails.
std::optional<StandardGeneratorsResult> standard_generators(GroupOracle& G, const Element& g,
                                                            const Element& c, double epsilon,
                                                            std::uint64_t k, unsigned N);

/// Evaluates the defining relators of Alt_n on the element pair (s, t):
/// s^{n-2} = t^3 = 1 together with (st)^{n-1} = 1 and
/// (t^{(-1)^k} s^{-k} t s^k)^2 = 1 for even n, or (st)^n = 1 and
/// (t s^{-k} t s^k)^2 = 1 for odd n.  The conjugates s^{-k} t s^k are
/// maintained incrementally, so the check costs O(n) multiplications.
bool check_carmichael_presentation(GroupOracle& G, const Element& s, const Element& t,
                                   std::uint64_t n);

/// Which of the two recognizable isomorphism types a group certified as.
enum class RecognisedKind { alternating, symmetric };

/// Group-operation totals attributed to each phase of recognition.
struct PhaseBreakdown {
  OpCounters candidates;
  OpCounters long_cycle;
  OpCounters standard_generators;
  OpCounters certification;
};

/// Outcome of one recognition run.  On success the reported degree and
/// kind are certified: the standard generator pair satisfies the Alt
/// relators and every oracle generator was re-derived from its computed
/// image, so a success is never wrong.  generator_images holds the image
/// of each oracle generator under the certified isomorphism.
struct RecognitionOutcome {
  enum class Status { success, fail };

  Status status = Status::fail;
  std::uint64_t degree = 0;
  RecognisedKind kind = RecognisedKind::alternating;
  Element standard_s;
  Element standard_t;
  std::optional<MatchingCycleBundle> bundle;
  std::vector<Permutation> generator_images;
  OpCounters counters;
  PhaseBreakdown phases;
};

/// Decides whether G is isomorphic to Alt_n or Sym_n for some 9 <= n <= N
/// and, if so, returns certified standard generators, the degree, the
/// kind, and generator images.  One-sided Monte Carlo with failure
/// probability at most epsilon on genuine input; a fail on other input is
/// always acceptable and a success is always correct.
/// Requires 0 < epsilon < 1 and N >= 9 (throws std::invalid_argument).
RecognitionOutcome recognise(GroupOracle& G, double epsilon, unsigned N);

}  // namespace snap

#endif  // SNAP_RECOGNIZER_HPP
