#ifndef SNAP_ISOMAP_HPP
#define SNAP_ISOMAP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snap/bbx.hpp"
#include "snap/recognizer.hpp"

namespace snap {

/// Letters of words over the standard generator pair (s, t).
enum class WordLetter : unsigned char { s, s_inv, t, t_inv };

/// A word over the standard generator pair, evaluated left to right.
using Word = std::vector<WordLetter>;

/// Evaluates word at the group elements s and t; the empty word yields
/// the identity.  Costs O(|word|) group operations.
Element evaluate_word(GroupOracle& G, const Word& word, const Element& s, const Element& t);

/// Evaluates word at the permutations s and t (right-action composition).
Permutation evaluate_word_perm(const Word& word, const Permutation& s, const Permutation& t);

/// Decomposes the even permutation p as a word in the standard generator
/// pair of degree p.degree().  The word has O(degree^2) letters and
/// evaluate_word_perm(word, s, t) == p for the standard pair (s, t).
/// Throws std::invalid_argument for odd p, which lies outside the
/// subgroup the pair generates.
Word perm_to_standard_word(const Permutation& p);

/// Thrown when support measurements of conjugated 3-cycles contradict
/// each other, i.e. the queried element does not act like a permutation
/// of the bundle coordinates.  Indicates the bundle does not describe a
/// genuine alternating or symmetric group; never raised on one.
class InconsistentImage : public std::runtime_error {
public:
  explicit InconsistentImage(const std::string& what) : std::runtime_error(what) {}
};

/// True iff the point labelled i in bundle coordinates lies in the
/// support of h.  Requires 3 <= i <= bundle.length (throws
/// std::invalid_argument otherwise); the labels 1, 2 and the storage
/// point are not directly observable.  Costs O(log i) group operations.
bool point_in_support(GroupOracle& G, const MatchingCycleBundle& bundle, std::uint64_t i,
                      const Element& h);

/// The image of the point labelled j under the permutation action of x
/// in bundle coordinates.  Evaluates the full image table, so prefer
/// evaluate_image when several points are needed.  Throws
/// InconsistentImage when the measurements admit no permutation.
std::uint64_t image_of_point(GroupOracle& G, const MatchingCycleBundle& bundle, const Element& x,
                             std::uint64_t j);

/// The permutation induced by x on the bundle coordinates
/// (degree = length, or length + 1 when a storage point is present).
/// Support measurements determine interior images directly; points
/// mapping into {1, 2, storage} are recovered by shifted re-measurement
/// and elimination.  O(length^2) group operations.  Throws
/// InconsistentImage when the measurements admit no permutation.
Permutation evaluate_image(GroupOracle& G, const MatchingCycleBundle& bundle, const Element& x);

/// A certified isomorphism type together with the images of the oracle
/// generators under the certifying isomorphism, normalized so that the
/// standard-generator elements map exactly to the standard permutations.
struct Certification {
  RecognisedKind kind = RecognisedKind::alternating;
  std::vector<Permutation> generator_images;
};

/// Completes the certificate begun by standard_generators: re-verifies
/// the defining relators on (sg.s, sg.t), computes the image of every
/// oracle generator, re-derives each generator from its image as a word
/// in (sg.s, sg.t) -- via an odd reference generator when images of odd
/// parity occur -- and confirms equality in G.  A returned certification
/// proves G is isomorphic to the alternating (all images even) or
/// symmetric group of degree sg.degree, independent of how the inputs
/// were produced.  Empty when a relator fails, any measurement is
/// inconsistent, or any re-derivation fails, as happens on groups of
/// other isomorphism types.
std::optional<Certification> certify(GroupOracle& G, const StandardGeneratorsResult& sg);

/// Convenience overload reading the generator pair, degree and bundle
/// from a successful recognition outcome.
std::optional<Certification> certify(GroupOracle& G, const RecognitionOutcome& outcome);

}  // namespace snap

#endif  // SNAP_ISOMAP_HPP
