#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "snap/backend.hpp"
#include "snap/bbx.hpp"
#include "snap/perm.hpp"
#include "snap/recognizer.hpp"

using namespace snap;

namespace {

struct MixEntry {
  GroupSpec spec;
  bool genuine;                 // true for Alt_n / Sym_n entries
  std::uint64_t degree;         // expected degree when genuine
  RecognisedKind kind;          // expected kind when genuine
};

std::vector<MixEntry> adversarial_pool() {
  std::vector<MixEntry> pool;
  for (std::uint32_t n = 9; n <= 16; ++n) {
    pool.push_back({GroupSpec::alt(n), true, n, RecognisedKind::alternating});
    pool.push_back({GroupSpec::sym(n), true, n, RecognisedKind::symmetric});
  }
  // Padded genuine entries: extra invisible fixed points must not change
  // the recognized degree.
  GroupSpec padded_alt = GroupSpec::alt(9);
  padded_alt.shroud = ShroudOptions{std::nullopt, 4};
  pool.push_back({padded_alt, true, 9, RecognisedKind::alternating});
  GroupSpec padded_sym = GroupSpec::sym(10);
  padded_sym.shroud = ShroudOptions{std::nullopt, 3};
  pool.push_back({padded_sym, true, 10, RecognisedKind::symmetric});
  // Negative controls: never recognizable, any success is a soundness bug.
  pool.push_back({cyclic_spec(30), false, 0, RecognisedKind::alternating});
  pool.push_back({cyclic_spec(17), false, 0, RecognisedKind::alternating});
  pool.push_back({dihedral_spec(20), false, 0, RecognisedKind::alternating});
  pool.push_back({psl_2_8_spec(), false, 0, RecognisedKind::alternating});
  pool.push_back({m11_spec(), false, 0, RecognisedKind::alternating});
  return pool;
}

}  // namespace

TEST_CASE("soundness: no false successes across adversarial mixed runs") {
  const auto pool = adversarial_pool();
  std::uint64_t genuine_runs = 0, genuine_successes = 0, negative_runs = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const MixEntry& entry = pool[i % pool.size()];
    auto G = shroud_oracle(entry.spec, 9000 + i);
    const RecognitionOutcome out = recognise(*G, 0.25, 16);
    if (entry.genuine) {
      ++genuine_runs;
      if (out.status == RecognitionOutcome::Status::success) ++genuine_successes;
    } else {
      ++negative_runs;
      // One-sided error: a success on a negative control is always a bug.
      REQUIRE(out.status == RecognitionOutcome::Status::fail);
    }
    if (out.status == RecognitionOutcome::Status::success) {
      // Every reported success must carry a white-box-verifiable claim.
      REQUIRE(entry.genuine);
      CHECK(out.degree == entry.degree);
      CHECK(out.kind == entry.kind);
      REQUIRE(out.bundle.has_value());
      const Permutation sp = as_permutation(out.standard_s);
      const Permutation tp = as_permutation(out.standard_t);
      CHECK(standard_pair_presentation(sp, tp, out.degree));
      CHECK_FALSE(tp.is_identity());
      REQUIRE(out.generator_images.size() == G->generators().size());
      bool any_odd = false;
      for (const Permutation& img : out.generator_images) {
        CHECK(img.degree() == out.degree);
        if (!img.is_even()) any_odd = true;
      }
      CHECK(any_odd == (out.kind == RecognisedKind::symmetric));
    }
  }
  CHECK(genuine_runs + negative_runs == 1000);
  CHECK(negative_runs >= 200);
  // Loose completeness floor; the acceptance gate checks the real rate.
  CHECK(genuine_successes * 10 >= genuine_runs * 7);
}

TEST_CASE("candidate search finds a genuine 3-cycle in most runs") {
  // The search guarantee: with probability >= 1 - eps the candidate list
  // contains a genuine 3-cycle.  At eps = 1/4 demand >= 150 of 200.
  const CandidateParams p = CandidateParams::for_search(0.25, 16);
  std::uint64_t hits = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto G = natural_oracle(GroupSpec::sym(9), 500 + seed);
    const CandidateResult r = three_cycle_candidates(*G, 0.25, 16);
    REQUIRE(r.status == CandidateResult::Status::candidates);
    REQUIRE(r.elements.size() <= p.draws * p.target);
    bool has_three_cycle = false;
    for (const Element& e : r.elements)
      if (as_permutation(e).is_cycle_of_length(3)) {
        has_three_cycle = true;
        break;
      }
    if (has_three_cycle) ++hits;
  }
  CHECK(hits >= 150);
}

TEST_CASE("recognition rate spot check at the acceptance failure budget") {
  for (const bool alternating : {true, false}) {
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < 50; ++t) {
      const GroupSpec spec = alternating ? GroupSpec::alt(9) : GroupSpec::sym(12);
      auto G = shroud_oracle(spec, 7100 + t);
      const RecognitionOutcome out = recognise(*G, 0.1, 16);
      if (out.status == RecognitionOutcome::Status::success) {
        CHECK(out.degree == spec.degree);
        CHECK((out.kind == RecognisedKind::alternating) == alternating);
        ++successes;
      }
    }
    // Guarantee is >= 0.9; empirically the rate is far higher.
    CHECK(successes >= 45);
  }
}
