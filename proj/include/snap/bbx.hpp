#ifndef SNAP_BBX_HPP
#define SNAP_BBX_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "snap/perm.hpp"  // BigInt

namespace snap {

/// Counts of black-box operations performed through one oracle.  The
/// recognizer's complexity claims are measured in these units.
struct OpCounters {
  std::uint64_t multiplications = 0;
  std::uint64_t inversions = 0;
  std::uint64_t equality_tests = 0;
  std::uint64_t random_draws = 0;

  std::uint64_t total() const {
    return multiplications + inversions + equality_tests + random_draws;
  }
  OpCounters operator-(const OpCounters& rhs) const {
    return {multiplications - rhs.multiplications, inversions - rhs.inversions,
            equality_tests - rhs.equality_tests, random_draws - rhs.random_draws};
  }
  OpCounters& operator+=(const OpCounters& rhs) {
    multiplications += rhs.multiplications;
    inversions += rhs.inversions;
    equality_tests += rhs.equality_tests;
    random_draws += rhs.random_draws;
    return *this;
  }
  void reset() { *this = OpCounters{}; }
};

/// Opaque payload of a group element; concrete oracles subclass this.
class ElementRep {
public:
  virtual ~ElementRep() = default;
};

/// Immutable, copyable handle to a group element of one oracle instance.
/// Copying never touches the oracle; all group-theoretic information flows
/// through GroupOracle calls.  Elements have no public comparison --
/// equality is an oracle operation and is counted.
class Element {
public:
  Element() = default;
  explicit Element(std::shared_ptr<const ElementRep> rep) : m_rep(std::move(rep)) {}

  bool valid() const { return m_rep != nullptr; }
  const ElementRep* rep() const { return m_rep.get(); }

private:
  std::shared_ptr<const ElementRep> m_rep;
};

/// The black-box group contract: multiply, invert, equality test, uniform
/// random element, and the identity, plus the generator list the group was
/// given by.  Every multiply/invert/equal/random call increments the
/// matching counter exactly once; derived classes implement the four
/// do_* hooks and provide identity and generators at construction.
class GroupOracle {
public:
  virtual ~GroupOracle() = default;

  Element multiply(const Element& a, const Element& b) {
    ++m_counters.multiplications;
    return do_multiply(a, b);
  }
  Element invert(const Element& a) {
    ++m_counters.inversions;
    return do_invert(a);
  }
  bool equal(const Element& a, const Element& b) {
    ++m_counters.equality_tests;
    return do_equal(a, b);
  }
  Element random_element() {
    ++m_counters.random_draws;
    return do_random();
  }

  const Element& identity() const { return m_identity; }
  const std::vector<Element>& generators() const { return m_generators; }

  OpCounters& counters() { return m_counters; }
  const OpCounters& counters() const { return m_counters; }

protected:
  GroupOracle(Element identity, std::vector<Element> generators)
      : m_identity(std::move(identity)), m_generators(std::move(generators)) {}

  virtual Element do_multiply(const Element& a, const Element& b) = 0;
  virtual Element do_invert(const Element& a) = 0;
  virtual bool do_equal(const Element& a, const Element& b) = 0;
  virtual Element do_random() = 0;

private:
  Element m_identity;
  std::vector<Element> m_generators;
  OpCounters m_counters;
};

/// x^e by square-and-multiply; O(log e) multiplications, power(x,0) = 1.
Element power(GroupOracle& G, const Element& x, const BigInt& e);

/// M = product of p^{floor(log_p N)} over all odd primes p <= N.  Raising
/// any element of Sym_N to the M-th power kills the odd part of its order.
BigInt odd_part_exponent(unsigned N);

/// x^M computed by exponentiating successively by each odd prime power;
/// same result as power(G, x, odd_part_exponent(N)) with bounded
/// intermediate exponents.
Element power_by_odd_part(GroupOracle& G, const Element& x, unsigned N);

/// Outcome of reducing an element of 2-power order to an involution.
struct TwoPowerResult {
  enum class Status {
    reduced,  ///< value holds the involution x^{2^{a-1}}
    discard,  ///< x was the identity; the candidate contributes nothing
    failure,  ///< no power of two within the bound kills x: the ambient
              ///< group has an element order impossible in Sym_N, which
              ///< certifies it is not Alt_n or Sym_n for any n <= N
  };
  Status status = Status::failure;
  Element value;
};

/// Repeatedly squares x to find the smallest a with x^{2^a} = 1; returns
/// x^{2^{a-1}} when a-1 <= log2(N), using at most floor(log2 N)+1
/// squarings.
TwoPowerResult two_power_reduce(GroupOracle& G, const Element& x, unsigned N);

/// True iff xy = yx (2 multiplications, 1 equality test).
bool commutes(GroupOracle& G, const Element& x, const Element& y);

/// y^{-1} x y: right conjugation, matching the right action on points.
Element conjugate(GroupOracle& G, const Element& x, const Element& y);

/// True iff x is not the identity and x^q is; q must be 2, 3 or 5.
bool has_prime_order(GroupOracle& G, const Element& x, unsigned q);

/// Convenience for equal(x, identity).
bool is_identity(GroupOracle& G, const Element& x);

}  // namespace snap

#endif  // SNAP_BBX_HPP
