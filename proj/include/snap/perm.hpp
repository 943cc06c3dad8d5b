#ifndef SNAP_PERM_HPP
#define SNAP_PERM_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace snap {

using BigInt = boost::multiprecision::cpp_int;

/// Dense permutation on the points {1,...,n}, stored as a 0-based image
/// array.  All group arithmetic uses the right action: points are written
/// to the right of the permutation, i^(pq) = (i^p)^q, so compose(p,q)
/// means "apply p first, then q".
class Permutation {
public:
  /// Identity permutation of the given degree.
  explicit Permutation(std::size_t degree = 0);

  /// Construct from a 0-based image vector (img[i] = image of point i+1,
  /// minus one).  Throws std::invalid_argument if not a bijection.
  explicit Permutation(std::vector<std::uint32_t> images0);

  /// Construct from a 1-based image list as used in group files.
  static Permutation from_image_list(const std::vector<std::uint32_t>& images1);

  /// Build a permutation of the given degree from disjoint cycles written
  /// with 1-based points, e.g. from_cycles(6, {{1,2},{3,4,5}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<std::uint32_t>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return m_images.size(); }

  /// Image of the 1-based point under the permutation.
  std::uint32_t image(std::uint32_t point1) const { return m_images[point1 - 1] + 1; }

  /// i^(pq) = (i^p)^q: apply *this first, then q.
  Permutation compose(const Permutation& q) const;
  Permutation inverse() const;
  /// q^{-1} * p * q (right conjugation, consistent with the right action).
  Permutation conjugated_by(const Permutation& q) const;
  /// p^e for any integer e (negative exponents use the inverse).
  Permutation power(long long e) const;

  bool is_identity() const;
  bool operator==(const Permutation& rhs) const { return m_images == rhs.m_images; }
  bool operator!=(const Permutation& rhs) const { return !(*this == rhs); }
  /// Lexicographic order on image arrays; used for canonical element tables.
  bool operator<(const Permutation& rhs) const { return m_images < rhs.m_images; }

  /// Disjoint cycles with 1-based points; fixed points omitted, each cycle
  /// starts at its smallest point, cycles sorted by first point.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  /// Multiset of cycle lengths, fixed points included, sorted descending.
  std::vector<std::size_t> cycle_type() const;

  /// Points moved by the permutation (1-based, ascending).
  std::vector<std::uint32_t> support() const;
  std::size_t support_size() const;

  /// True when the permutation is a single k-cycle (and fixes the rest).
  bool is_cycle_of_length(std::size_t k) const;

  /// True for even permutations (products of an even number of transpositions).
  bool is_even() const;

  /// Order of the permutation (lcm of cycle lengths).
  BigInt order() const;

  /// 1-based image list for serialization.
  std::vector<std::uint32_t> image_list() const;

  /// Cycle notation, e.g. "(1,2)(3,4,5)"; "()" for the identity.
  std::string str() const;

  const std::vector<std::uint32_t>& raw() const { return m_images; }

private:
  std::vector<std::uint32_t> m_images;  // 0-based images
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace snap

#endif  // SNAP_PERM_HPP
