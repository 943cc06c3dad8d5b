#ifndef SNAP_BACKEND_HPP
#define SNAP_BACKEND_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snap/bbx.hpp"
#include "snap/perm.hpp"
#include "snap/rng.hpp"

namespace snap {

/// Error for malformed or unsupported group files.
class GroupFileError : public std::runtime_error {
public:
  explicit GroupFileError(const std::string& what) : std::runtime_error(what) {}
};

/// Shroud configuration carried by a group spec: an optional fixed seed
/// for the secret relabeling and the number of extra fixed points to pad
/// the action with (padding is invisible to a black box).
struct ShroudOptions {
  std::optional<std::uint64_t> seed;
  std::uint32_t padding = 0;
};

/// Description of a permutation group: Alt_n, Sym_n, or the closure of an
/// explicit generator list, plus optional shroud options.
struct GroupSpec {
  enum class Kind { alt, sym, generators };

  Kind kind = Kind::sym;
  std::uint32_t degree = 0;
  std::vector<Permutation> generator_list;  // generators kind only
  std::optional<ShroudOptions> shroud;

  static GroupSpec alt(std::uint32_t n);
  static GroupSpec sym(std::uint32_t n);
  static GroupSpec from_generators(std::vector<Permutation> gens);

  /// Degree of the natural action (generator degree for generator lists).
  std::uint32_t natural_degree() const;

  static GroupSpec parse_json(const std::string& text);
  std::string to_json() const;
};

/// Bundled negative-control groups: almost simple or small groups that
/// are not alternating or symmetric in their given action.
GroupSpec cyclic_spec(std::uint32_t n);            // C_n = <(1,...,n)>
GroupSpec dihedral_spec(std::uint32_t n);          // order 2n, degree n
GroupSpec psl_2_8_spec();                          // PSL(2,8), degree 9
GroupSpec m11_spec();                              // Mathieu group M_11, degree 11

/// Live/peak counts of element handles created by one oracle; reported by
/// the benchmark as the measured element-storage footprint.
struct ElementStats {
  std::uint64_t live = 0;
  std::uint64_t peak = 0;
  std::uint64_t created = 0;
};

/// Element payload of the permutation backend.
class PermElementRep : public ElementRep {
public:
  PermElementRep(Permutation p, std::shared_ptr<ElementStats> stats);
  ~PermElementRep() override;

  const Permutation& perm() const { return m_perm; }

private:
  Permutation m_perm;
  std::shared_ptr<ElementStats> m_stats;
};

/// White-box accessor for tests and reporting: the permutation inside an
/// element handle, in the oracle's (possibly shrouded) coordinates.
/// The reference aliases storage owned by `e`; copy the result if the
/// element is a temporary that will not outlive the expression.
const Permutation& as_permutation(const Element& e);

/// Permutation-backed oracle.  Uniform random elements are exact: Fisher-
/// Yates for Sym_n / Alt_n, and a full element table (closure of the
/// generator list) for generator-kind groups.
class PermOracle : public GroupOracle {
public:
  ~PermOracle() override = default;

  /// Wrap a permutation in the oracle's internal coordinates (tests and
  /// samplers only; degree must match the embedding degree).
  Element wrap(Permutation p);

  const ElementStats& element_stats() const { return *m_stats; }

  static std::unique_ptr<PermOracle> create(const GroupSpec& spec, const Permutation& relabel,
                                            std::uint32_t emb_degree, std::uint64_t sample_seed);

protected:
  Element do_multiply(const Element& a, const Element& b) override;
  Element do_invert(const Element& a) override;
  bool do_equal(const Element& a, const Element& b) override;
  Element do_random() override;

private:
  PermOracle(const GroupSpec& spec, Permutation relabel, std::uint32_t emb_degree,
             std::uint64_t sample_seed, std::shared_ptr<ElementStats> stats,
             std::vector<Element> dressed_gens, Element id);

  Permutation dress(const Permutation& inner) const;

  GroupSpec::Kind m_kind;
  std::uint32_t m_inner_degree;
  std::uint32_t m_emb_degree;
  Permutation m_relabel;  // secret conjugator on the embedding points
  std::vector<Permutation> m_table;  // generator-kind element table
  RandomStream m_rng;
  std::shared_ptr<ElementStats> m_stats;
};

/// Black-box oracle for the described group, with elements relabeled by a
/// secret random conjugator and optionally padded with invisible fixed
/// points.  The exposed generator set is the relabeled natural generator
/// set.  The relabeling seed comes from the spec when pinned there,
/// otherwise it is derived deterministically from run_seed.
std::unique_ptr<PermOracle> shroud_oracle(const GroupSpec& spec, std::uint64_t run_seed);

/// Oracle in natural coordinates (identity relabeling, no padding); used
/// by white-box tests that need to inject known permutations.
std::unique_ptr<PermOracle> natural_oracle(const GroupSpec& spec, std::uint64_t seed);

/// All elements of the group generated by gens, by breadth-first closure.
/// Throws GroupFileError when the group exceeds cap elements.
std::vector<Permutation> enumerate_closure(const std::vector<Permutation>& gens,
                                           std::size_t cap = (1u << 21));

/// The standard generator pair (s,t) of Alt_n: s = (3,...,n) for odd n,
/// s = (1,2)(3,...,n) for even n, and t = (1,2,3).
std::pair<Permutation, Permutation> standard_generators_perm(std::size_t n);

/// Evaluates the defining relators of Alt_n on a candidate pair (s,t) of
/// permutations: s^{n-2} = t^3 = 1, (st)^{n-1} = 1 and
/// (t^{(-1)^k} s^{-k} t s^k)^2 = 1 for even n, or (st)^n = 1 and
/// (t s^{-k} t s^k)^2 = 1 for odd n.
bool standard_pair_presentation(const Permutation& s, const Permutation& t, std::size_t n);

/// White-box test utility: true iff g is a k-cycle, c a 3-cycle inside
/// supp g, and (g c^2, c) generate Alt_k on that support in the standard
/// way (the presentation above holds and c is nontrivial).
bool is_matching_cycle(const Permutation& g, const Permutation& c, std::size_t k);

}  // namespace snap

#endif  // SNAP_BACKEND_HPP
