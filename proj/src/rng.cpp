#include "snap/rng.hpp"

#include <stdexcept>
#include <utility>

namespace snap {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t hash64(std::uint64_t value) {
  std::uint64_t s = value;
  return splitmix64(s);
}

std::uint64_t hash_tag(std::string_view tag) {
  // FNV-1a, then one splitmix64 finalization for avalanche.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return hash64(h);
}

RandomStream::RandomStream(std::uint64_t seed) : m_seed(seed), m_gen(seed) {}

std::uint64_t RandomStream::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("RandomStream::below: n must be positive");
  if ((n & (n - 1)) == 0) return m_gen() & (n - 1);
  // Rejection sampling from the smallest power-of-two range covering n;
  // keeps the draw exactly uniform and the sequence platform-independent.
  std::uint64_t mask = ~0ull;
  std::uint64_t top = n - 1;
  while (mask >> 1 >= top) mask >>= 1;
  for (;;) {
    std::uint64_t v = m_gen() & mask;
    if (v < n) return v;
  }
}

double RandomStream::next_unit() {
  return static_cast<double>(m_gen() >> 11) * (1.0 / 9007199254740992.0);
}

RandomStream RandomStream::split(std::string_view tag) const { return split(hash_tag(tag)); }

RandomStream RandomStream::split(std::uint64_t tag) const {
  std::uint64_t s = m_seed ^ hash64(tag);
  return RandomStream(splitmix64(s));
}

Permutation RandomStream::uniform_perm(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(below(i));
    std::swap(img[i - 1], img[j]);
  }
  return Permutation(std::move(img));
}

Permutation RandomStream::uniform_even_perm(std::size_t n) {
  Permutation p = uniform_perm(n);
  if (p.is_even()) return p;
  // Compose with (1,2) on the input side: swap the images of points 1 and 2.
  std::vector<std::uint32_t> img = p.raw();
  std::swap(img[0], img[1]);
  return Permutation(std::move(img));
}

}  // namespace snap
