#ifndef SNAP_RNG_HPP
#define SNAP_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "snap/perm.hpp"

namespace snap {

/// splitmix64 step; used to derive independent child seeds from one root
/// seed.  Part of the replayable-run contract: child = splitmix64 applied
/// to (parent seed XOR splitmix64(tag)).
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t hash64(std::uint64_t value);
std::uint64_t hash_tag(std::string_view tag);

/// Deterministic random stream.  All randomness in the project flows
/// through this class so that runs are replayable from a single 64-bit
/// seed on any platform: mt19937_64 has a standardized sequence, and both
/// bounded sampling (rejection from masked 64-bit draws) and shuffling
/// (explicit Fisher-Yates) are implemented here rather than delegated to
/// unspecified standard-library distributions.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t seed() const { return m_seed; }

  /// Uniform value in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

  std::uint64_t next_u64() { return m_gen(); }

  /// Uniform double in [0,1) built from the top 53 bits of one draw.
  double next_unit();

  /// Independent child stream; deterministic function of (seed, tag).
  RandomStream split(std::string_view tag) const;
  RandomStream split(std::uint64_t tag) const;

  /// Exactly uniform element of Sym_n via Fisher-Yates.
  Permutation uniform_perm(std::size_t n);

  /// Exactly uniform element of Alt_n: draw from Sym_n and, if the result
  /// is odd, compose with the transposition of the two smallest points.
  /// This maps Sym_n two-to-one onto Alt_n, so the result is exact.
  Permutation uniform_even_perm(std::size_t n);

private:
  std::uint64_t m_seed;
  std::mt19937_64 m_gen;
};

}  // namespace snap

#endif  // SNAP_RNG_HPP
