#include "snap/bbx.hpp"

#include <stdexcept>

namespace snap {

Element power(GroupOracle& G, const Element& x, const BigInt& e) {
  if (e < 0) throw std::invalid_argument("power: exponent must be non-negative");
  if (e == 0) return G.identity();
  // Right-to-left square-and-multiply over the bits of e.
  Element acc = G.identity();
  Element base = x;
  std::size_t bits = boost::multiprecision::msb(e) + 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) acc = G.multiply(acc, base);
    if (i + 1 < bits) base = G.multiply(base, base);
  }
  return acc;
}

namespace {

std::vector<unsigned> odd_primes_up_to(unsigned N) {
  std::vector<bool> composite(N + 1, false);
  std::vector<unsigned> primes;
  for (unsigned p = 2; p <= N; ++p) {
    if (composite[p]) continue;
    if (p != 2) primes.push_back(p);
    for (unsigned long long q = 1ull * p * p; q <= N; q += p) composite[static_cast<unsigned>(q)] = true;
  }
  return primes;
}

BigInt prime_power_floor(unsigned p, unsigned N) {
  BigInt pe = p;
  while (pe * p <= N) pe *= p;
  return pe;
}

}  // namespace

BigInt odd_part_exponent(unsigned N) {
  if (N < 3) throw std::invalid_argument("odd_part_exponent: N must be at least 3");
  BigInt M = 1;
  for (unsigned p : odd_primes_up_to(N)) M *= prime_power_floor(p, N);
  return M;
}

Element power_by_odd_part(GroupOracle& G, const Element& x, unsigned N) {
  if (N < 3) throw std::invalid_argument("power_by_odd_part: N must be at least 3");
  Element y = x;
  for (unsigned p : odd_primes_up_to(N)) y = power(G, y, prime_power_floor(p, N));
  return y;
}

TwoPowerResult two_power_reduce(GroupOracle& G, const Element& x, unsigned N) {
  if (is_identity(G, x)) return {TwoPowerResult::Status::discard, Element{}};
  // Invariant: prev = x^{2^{s-1}} at squaring number s, and 2^{s-1} <= N.
  // A successful return gives the smallest a with x^{2^a} = 1 as a = s,
  // so the returned element is x^{2^{a-1}} with a - 1 <= log2(N).  The
  // loop performs at most floor(log2 N) + 1 squarings.
  Element prev = x;
  std::uint64_t exp_prev = 1;  // 2^{s-1}
  for (;;) {
    Element cur = G.multiply(prev, prev);
    if (is_identity(G, cur)) return {TwoPowerResult::Status::reduced, prev};
    if (exp_prev * 2 > N) return {TwoPowerResult::Status::failure, Element{}};
    prev = cur;
    exp_prev *= 2;
  }
}

bool commutes(GroupOracle& G, const Element& x, const Element& y) {
  return G.equal(G.multiply(x, y), G.multiply(y, x));
}

Element conjugate(GroupOracle& G, const Element& x, const Element& y) {
  return G.multiply(G.invert(y), G.multiply(x, y));
}

bool has_prime_order(GroupOracle& G, const Element& x, unsigned q) {
  if (q != 2 && q != 3 && q != 5)
    throw std::invalid_argument("has_prime_order: q must be 2, 3 or 5");
  if (is_identity(G, x)) return false;
  return is_identity(G, power(G, x, BigInt(q)));
}

bool is_identity(GroupOracle& G, const Element& x) { return G.equal(x, G.identity()); }

}  // namespace snap
