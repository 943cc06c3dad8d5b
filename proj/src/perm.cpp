#include "snap/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace snap {

namespace {

void check_bijection(const std::vector<std::uint32_t>& images0) {
  std::vector<bool> seen(images0.size(), false);
  for (std::uint32_t v : images0) {
    if (v >= images0.size() || seen[v])
      throw std::invalid_argument("permutation image array is not a bijection");
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) : m_images(degree) {
  std::iota(m_images.begin(), m_images.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images0) : m_images(std::move(images0)) {
  check_bijection(m_images);
}

Permutation Permutation::from_image_list(const std::vector<std::uint32_t>& images1) {
  std::vector<std::uint32_t> images0(images1.size());
  for (std::size_t i = 0; i < images1.size(); ++i) {
    if (images1[i] == 0 || images1[i] > images1.size())
      throw std::invalid_argument("1-based image list entry out of range");
    images0[i] = images1[i] - 1;
  }
  return Permutation(std::move(images0));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::uint32_t a = cyc[i];
      std::uint32_t b = cyc[(i + 1) % cyc.size()];
      if (a == 0 || a > degree || b == 0 || b > degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[a - 1]) throw std::invalid_argument("cycles are not disjoint");
      used[a - 1] = true;
      p.m_images[a - 1] = b - 1;
    }
  }
  check_bijection(p.m_images);
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<std::uint32_t>> cycles) {
  std::vector<std::vector<std::uint32_t>> v;
  v.reserve(cycles.size());
  for (const auto& c : cycles) v.emplace_back(c);
  return from_cycles(degree, v);
}

Permutation Permutation::compose(const Permutation& q) const {
  if (degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  Permutation out(degree());
  for (std::size_t i = 0; i < m_images.size(); ++i) out.m_images[i] = q.m_images[m_images[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < m_images.size(); ++i) out.m_images[m_images[i]] = static_cast<std::uint32_t>(i);
  return out;
}

Permutation Permutation::conjugated_by(const Permutation& q) const {
  if (degree() != q.degree()) throw std::invalid_argument("conjugate: degree mismatch");
  // (q^{-1} p q)(i) = q(p(q^{-1}(i))); build directly by relabeling.
  Permutation out(degree());
  for (std::size_t i = 0; i < m_images.size(); ++i) out.m_images[q.m_images[i]] = q.m_images[m_images[i]];
  return out;
}

Permutation Permutation::power(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ull
                               : static_cast<unsigned long long>(e);
  Permutation acc(degree());
  while (k != 0) {
    if (k & 1ull) acc = acc.compose(base);
    base = base.compose(base);
    k >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < m_images.size(); ++i)
    if (m_images[i] != i) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || m_images[i] == i) continue;
    std::vector<std::uint32_t> cyc;
    std::uint32_t j = static_cast<std::uint32_t>(i);
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j + 1);
      j = m_images[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    std::uint32_t j = static_cast<std::uint32_t>(i);
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = m_images[j];
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::vector<std::uint32_t> Permutation::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < m_images.size(); ++i)
    if (m_images[i] != i) out.push_back(static_cast<std::uint32_t>(i) + 1);
  return out;
}

std::size_t Permutation::support_size() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < m_images.size(); ++i)
    if (m_images[i] != i) ++n;
  return n;
}

bool Permutation::is_cycle_of_length(std::size_t k) const {
  if (k < 2) return k == 1 ? false : is_identity();
  if (support_size() != k) return false;
  auto cycs = cycles();
  return cycs.size() == 1 && cycs[0].size() == k;
}

bool Permutation::is_even() const {
  // Parity = (number of points moved) - (number of nontrivial cycles) mod 2,
  // computed without allocating the cycle list.
  std::vector<bool> seen(degree(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || m_images[i] == i) continue;
    std::size_t len = 0;
    std::uint32_t j = static_cast<std::uint32_t>(i);
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = m_images[j];
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

BigInt Permutation::order() const {
  BigInt ord = 1;
  for (std::size_t len : cycle_type()) {
    BigInt l = static_cast<unsigned>(len);
    ord = ord / boost::multiprecision::gcd(ord, l) * l;
  }
  return ord;
}

std::vector<std::uint32_t> Permutation::image_list() const {
  std::vector<std::uint32_t> out(m_images.size());
  for (std::size_t i = 0; i < m_images.size(); ++i) out[i] = m_images[i] + 1;
  return out;
}

std::string Permutation::str() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycs) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ',';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

}  // namespace snap
