#include "snap/recognizer.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "snap/isomap.hpp"

namespace snap {

namespace {

// x^{-1} e x with the inverse already at hand: two multiplications.
Element conj_pre(GroupOracle& G, const Element& e, const Element& x, const Element& x_inv) {
  return G.multiply(G.multiply(x_inv, e), x);
}

}  // namespace

CandidateParams CandidateParams::for_search(double epsilon, unsigned N) {
  const double ln_n = std::log(static_cast<double>(N));
  const double ln_eps = std::log(3.0 / epsilon);
  CandidateParams p;
  p.draws = static_cast<std::uint64_t>(std::ceil(13.0 * ln_n * ln_eps));
  p.target = static_cast<std::uint64_t>(std::ceil(3.0 * ln_eps));
  p.per_draw_cap = static_cast<std::uint64_t>(
      std::ceil(3.0 * static_cast<double>(N) * static_cast<double>(p.target) / 5.0));
  return p;
}

BolsterParams BolsterParams::for_search(double epsilon, unsigned N) {
  BolsterParams p;
  p.keep = static_cast<std::uint64_t>(std::ceil(1.75 * std::log(1.0 / epsilon)));
  p.draws = 7ull * static_cast<std::uint64_t>(N) * p.keep;
  return p;
}

CandidateResult three_cycle_candidates(GroupOracle& G, double epsilon, unsigned N) {
  const CandidateParams params = CandidateParams::for_search(epsilon, N);
  CandidateResult out;
  for (std::uint64_t draw = 0; draw < params.draws; ++draw) {
    const Element raw = G.random_element();
    const TwoPowerResult reduced = two_power_reduce(G, power_by_odd_part(G, raw, N), N);
    if (reduced.status == TwoPowerResult::Status::failure) {
      // An element order with too large a 2-part certifies that G is not
      // an alternating or symmetric group of degree <= N.
      out.status = CandidateResult::Status::impossible;
      out.elements.clear();
      return out;
    }
    if (reduced.status == TwoPowerResult::Status::discard) continue;
    const Element& invol = reduced.value;
    std::uint64_t kept = 0;
    for (std::uint64_t trial = 0; trial < params.per_draw_cap && kept < params.target; ++trial) {
      const Element conj = conjugate(G, invol, G.random_element());
      if (commutes(G, invol, conj)) continue;
      ++kept;
      const Element prod = G.multiply(invol, conj);
      out.elements.push_back(G.multiply(prod, prod));
    }
  }
  return out;
}

bool is_pre_bolstering(GroupOracle& G, const Element& c, const Element& r) {
  const Element cr = conjugate(G, c, r);
  if (commutes(G, cr, c)) return false;
  const Element r2 = G.multiply(r, r);
  const Element cr2 = conjugate(G, c, r2);
  if (G.equal(cr2, c)) return false;
  if (G.equal(cr2, G.multiply(c, c))) return false;
  return commutes(G, c, cr2);
}

std::vector<Element> bolstering_elements(GroupOracle& G, const Element& c, double epsilon,
                                         unsigned N) {
  const BolsterParams params = BolsterParams::for_search(epsilon, N);
  const Element c2 = G.multiply(c, c);
  std::vector<Element> out;
  for (std::uint64_t draw = 0; draw < params.draws && out.size() < params.keep; ++draw) {
    const Element r = G.random_element();
    if (!is_pre_bolstering(G, c, r)) continue;
    // Orientation probe z := c^{(r c r)} c^{(r c^{(r^2)} c)}: a 3-cycle for
    // one orientation of c and a 5-cycle for the other, so z^3 = 1 decides
    // whether to bolster with c^2 r or c r.
    const Element cr2 = conjugate(G, c, G.multiply(r, r));
    const Element left = conjugate(G, c, G.multiply(G.multiply(r, c), r));
    const Element right = conjugate(G, c, G.multiply(G.multiply(r, cr2), c));
    const Element z = G.multiply(left, right);
    const Element z3 = G.multiply(G.multiply(z, z), z);
    const bool cube_trivial = G.equal(z3, G.identity());
    out.push_back(cube_trivial ? G.multiply(c2, r) : G.multiply(c, r));
  }
  return out;
}

std::optional<CycleProbe> cycle_structure_probe(GroupOracle& G, const Element& c, const Element& x,
                                                unsigned N) {
  const Element x_inv = G.invert(x);
  // conj tracks c^{(x^{mu+1})}; m is the first mu whose order-5 test on
  // c^{(x^{mu+1})} c fails, i.e. min(alpha, beta).
  Element conj = conj_pre(G, conj_pre(G, c, x, x_inv), x, x_inv);
  CycleProbe probe;
  bool found = false;
  for (std::uint64_t mu = 1; 2 * mu < N; ++mu) {
    if (!has_prime_order(G, G.multiply(conj, c), 5)) {
      probe.m = mu;
      found = true;
      break;
    }
    conj = conj_pre(G, conj, x, x_inv);
  }
  if (!found) return std::nullopt;
  probe.alpha_eq_beta = G.equal(conj, c) || G.equal(conj, G.multiply(c, c));
  if (probe.alpha_eq_beta) return probe;
  probe.first_form = has_prime_order(G, G.multiply(conj, c), 2);
  const Element next = conj_pre(G, conj, x, x_inv);  // c^{(x^{m+2})}
  probe.diff_one = !has_prime_order(G, G.multiply(next, c), 5);
  if (probe.diff_one) return probe;
  const bool comm = commutes(G, next, conjugate(G, conj, c));
  probe.alpha_gt_beta = probe.first_form ? !comm : comm;
  return probe;
}

std::optional<BuiltCycle> build_cycle(GroupOracle& G, const Element& c, const Element& x,
                                      unsigned N) {
  const auto probe = cycle_structure_probe(G, c, x, N);
  if (!probe) return std::nullopt;
  const Element x_inv = G.invert(x);

  // y := c c^x ... c^{(x^m)} covers the first m points of both chains.
  Element conj = c;
  Element y = c;
  for (std::uint64_t i = 1; i <= probe->m; ++i) {
    conj = conj_pre(G, conj, x, x_inv);
    y = G.multiply(y, conj);
  }
  if (probe->alpha_eq_beta || probe->diff_one) return BuiltCycle{2 * probe->m + 3, y};

  // The chains differ in length by >= 2: splice in a corrective 3-cycle
  // z = d^e, where d := c^{(x^{m+1})} and e is a conjugate of d chosen by
  // the chain shape, then absorb the remainder of the longer chain in
  // steps of x^2.
  const Element d = conj_pre(G, conj, x, x_inv);
  Element e = conjugate(G, d,
                        (probe->first_form != probe->alpha_gt_beta)
                            ? G.multiply(x, c)
                            : G.multiply(x, G.multiply(c, c)));
  if (!probe->alpha_gt_beta) e = G.multiply(e, e);
  const Element z = conjugate(G, d, e);

  const Element x2 = G.multiply(x, x);
  const Element x2_inv = G.invert(x2);
  Element g = G.multiply(y, z);
  Element zc = z;
  for (std::uint64_t mp = 1; 2 * mp < N; ++mp) {
    zc = conj_pre(G, zc, x2, x2_inv);
    if (!has_prime_order(G, G.multiply(zc, c), 5)) {
      return BuiltCycle{2 * mp + 2 * probe->m + 3, g};
    }
    g = G.multiply(g, zc);
  }
  return std::nullopt;
}

std::optional<BuiltCycle> construct_long_cycle(GroupOracle& G, const Element& c, double epsilon,
                                               unsigned N) {
  // Halving the budget leaves room for the possibility that the bolstering
  // draws themselves fall short.
  const double half = epsilon / 2.0;
  const BolsterParams params = BolsterParams::for_search(half, N);
  const std::vector<Element> bols = bolstering_elements(G, c, half, N);
  if (bols.size() < params.keep) return std::nullopt;
  std::optional<BuiltCycle> best;
  for (const Element& x : bols) {
    auto built = build_cycle(G, c, x, N);
    if (!built) return std::nullopt;
    if (!best || built->length > best->length) best = std::move(built);
  }
  return best;
}

PointProbe::PointProbe(GroupOracle& G, const Element& g, const Element& c) : m_G(&G), m_c(c) {
  const Element g2 = G.multiply(g, g);
  const Element g3 = G.multiply(g2, g);
  const Element g4 = G.multiply(g3, g);
  const Element cg = conjugate(G, c, g);
  const Element cg3 = conjugate(G, c, g3);
  const Element cg4 = conjugate(G, c, g4);
  const Element cg3_sq = G.multiply(cg3, cg3);

  m_x2_prefix = g2;
  m_x3_prefix = G.multiply(G.multiply(g2, cg3), cg4);

  std::vector<Element> h1;
  h1.push_back(G.multiply(c, c));
  h1.push_back(conjugate(G, c, cg));
  h1.push_back(conjugate(G, c, G.multiply(cg, cg3)));
  const Element cg_cg3sq = G.multiply(cg, cg3_sq);
  h1.push_back(conjugate(G, c, cg_cg3sq));
  h1.push_back(conjugate(G, c, G.multiply(cg_cg3sq, cg4)));

  std::vector<Element> h2;
  h2.push_back(c);
  h2.push_back(cg);
  h2.push_back(conjugate(G, c, G.multiply(g, cg3)));
  const Element g_cg3sq = G.multiply(g, cg3_sq);
  h2.push_back(conjugate(G, c, g_cg3sq));
  h2.push_back(conjugate(G, c, G.multiply(g_cg3sq, cg4)));

  // The queries ask for two *distinct* commuting members, so collapse
  // duplicates (possible only for degenerate inputs) once here.
  const auto dedup = [&G](std::vector<Element>& raw) {
    std::vector<Element> kept;
    for (const Element& e : raw) {
      bool seen = false;
      for (const Element& k : kept) {
        if (G.equal(e, k)) {
          seen = true;
          break;
        }
      }
      if (!seen) kept.push_back(e);
    }
    return kept;
  };
  m_h1 = dedup(h1);
  m_h2 = dedup(h2);
}

bool PointProbe::fixes_distinguished_point(const Element& r) const {
  GroupOracle& G = *m_G;
  const Element xs[3] = {conjugate(G, m_c, r), conjugate(G, m_c, G.multiply(m_x2_prefix, r)),
                         conjugate(G, m_c, G.multiply(m_x3_prefix, r))};
  for (const std::vector<Element>* hs : {&m_h1, &m_h2}) {
    for (const Element& x : xs) {
      std::uint32_t hits = 0;
      for (const Element& h : *hs) {
        if (commutes(G, x, h) && ++hits >= 2) return false;
      }
    }
  }
  return true;
}

bool is_fixed_point(GroupOracle& G, const Element& g, const Element& c, const Element& r) {
  return PointProbe(G, g, c).fixes_distinguished_point(r);
}

std::optional<Element> adjust_cycle(GroupOracle& G, const Element& g, const Element& c,
                                    const Element& r, std::uint64_t k) {
  const Element g_inv = G.invert(g);
  // cj runs over c^{(g^{j-3})} for j = 1..k, starting at c^{(g^{-2})}.
  Element cj = G.multiply(G.multiply(g, G.multiply(G.multiply(g, c), g_inv)), g_inv);
  std::vector<std::uint64_t> fixed;
  for (std::uint64_t j = 1; j <= k; ++j) {
    if (j > 1) cj = conj_pre(G, cj, g, g_inv);
    if (is_fixed_point(G, g, cj, r)) fixed.push_back(j);
  }
  if (fixed.size() < 2 || fixed.size() == k) return std::nullopt;

  const std::uint64_t f1 = fixed[0];
  const std::uint64_t f2 = fixed[1];
  std::uint64_t m = 1;  // smallest cycle point moved by r
  for (std::uint64_t v : fixed) {
    if (v == m) {
      ++m;
    } else if (v > m) {
      break;
    }
  }
  unsigned mask = 0;
  for (std::uint64_t v : fixed) {
    if (v > 4) break;
    mask |= 1u << (v - 1);
  }

  const Element c2 = G.multiply(c, c);
  const Element w = G.multiply(g, c2);
  bool trivial = false;
  Element x;
  switch (mask) {
    case 0b1111:
    case 0b0111:
      x = G.multiply(conjugate(G, c, G.multiply(power(G, w, BigInt(m - 3)), c)), c);
      break;
    case 0b1011:
    case 0b0011:
      trivial = true;
      break;
    case 0b1101:
      x = conjugate(G, c, g);
      break;
    case 0b0101:
      x = conjugate(G, c2, g);
      break;
    case 0b1001:
    case 0b0001:
      x = conjugate(G, c, G.multiply(power(G, w, BigInt(f2 - 3)), c));
      break;
    case 0b1110:
    case 0b1010:
      x = conjugate(G, c, conjugate(G, c, g));
      break;
    case 0b0110:
      x = conjugate(G, c2, conjugate(G, c, g));
      break;
    case 0b0010:
      x = conjugate(G, c, G.multiply(power(G, w, BigInt(f2 - 3)), conjugate(G, c, g)));
      break;
    case 0b1100:
    case 0b0100:
      x = G.multiply(conjugate(G, c2, power(G, w, BigInt(f2 - 3))), c2);
      break;
    default:  // F cap {1,2,3,4} is {4} or empty
      x = G.multiply(conjugate(G, c, power(G, w, BigInt(f2 - 3))),
                     conjugate(G, c, power(G, w, BigInt(f1 - 3))));
      break;
  }
  return trivial ? r : conjugate(G, r, x);
}

AppendResult append_points(GroupOracle& G, const Element& g, const Element& c, const Element& r,
                           const Element& s, std::uint64_t k, std::uint64_t k0) {
  AppendResult out{g, s, k};
  const Element c2 = G.multiply(c, c);
  Element w = G.multiply(out.g, c2);
  const Element r_inv = G.invert(r);
  Element xj = c;  // c^{(r^j)} as j advances
  for (std::uint64_t j = 1; j < k0; ++j) {
    xj = conj_pre(G, xj, r, r_inv);
    if (!commutes(G, xj, w)) continue;
    if (is_identity(G, out.s)) {
      out.s = xj;
    } else if (!G.equal(out.s, xj)) {
      out.k += 2;
      out.g = G.multiply(out.g, conjugate(G, out.s, G.multiply(xj, xj)));
      out.s = G.identity();
      w = G.multiply(out.g, c2);
    }
  }
  return out;
}

bool check_carmichael_presentation(GroupOracle& G, const Element& s, const Element& t,
                                   std::uint64_t n) {
  if (n < 5) return false;
  const Element& id = G.identity();
  if (!G.equal(power(G, s, BigInt(n - 2)), id)) return false;
  if (!G.equal(G.multiply(G.multiply(t, t), t), id)) return false;
  const bool even = (n % 2 == 0);
  if (!G.equal(power(G, G.multiply(s, t), BigInt(even ? n - 1 : n)), id)) return false;
  const Element t_inv = G.invert(t);
  const Element s_inv = G.invert(s);
  const std::uint64_t relator_count = even ? (n - 2) / 2 : (n - 3) / 2;
  Element u = t;  // s^{-j} t s^j, advanced incrementally
  for (std::uint64_t j = 1; j <= relator_count; ++j) {
    u = conj_pre(G, u, s, s_inv);
    const Element& head = (even && j % 2 == 1) ? t_inv : t;
    const Element rel = G.multiply(head, u);
    if (!G.equal(G.multiply(rel, rel), id)) return false;
  }
  return true;
}

std::optional<StandardGeneratorsResult> standard_generators(GroupOracle& G, const Element& g,
                                                            const Element& c, double epsilon,
                                                            std::uint64_t k, unsigned N) {
  if (k < 9 || k > N) return std::nullopt;
  const Element c2 = G.multiply(c, c);
  const Element r = G.multiply(g, c2);  // in bundle coordinates: (3,4,...,k)
  const std::uint64_t k0 = k - 2;
  const double ln_total = std::log(static_cast<double>(N)) + std::log(1.0 / epsilon);
  const std::uint64_t conjugates =
      static_cast<std::uint64_t>(std::ceil(ln_total / std::log(10.0 / 3.0)));

  Element cur_g = g;
  Element cur_s = G.identity();
  std::uint64_t cur_k = k;
  for (std::uint64_t i = 0; i < conjugates; ++i) {
    const Element x = conjugate(G, r, G.random_element());
    const auto adjusted = adjust_cycle(G, cur_g, c, x, cur_k);
    if (!adjusted) return std::nullopt;
    AppendResult appended = append_points(G, cur_g, c, *adjusted, cur_s, cur_k, k0);
    cur_g = std::move(appended.g);
    cur_s = std::move(appended.s);
    cur_k = appended.k;
    if (cur_k > N) return std::nullopt;
  }

  StandardGeneratorsResult out;
  out.bundle.three_cycle = c;
  out.bundle.cycle = cur_g;
  out.bundle.length = cur_k;
  if (is_identity(G, cur_s)) {
    out.degree = cur_k;
    out.s = G.multiply(c2, cur_g);
    out.t = c;
  } else {
    out.degree = cur_k + 1;
    out.bundle.storage = cur_s;
    out.s = G.multiply(cur_g, cur_s);
    out.t = cur_s;
  }
  if (is_identity(G, out.t)) return std::nullopt;
  if (!check_carmichael_presentation(G, out.s, out.t, out.degree)) return std::nullopt;
  return out;
}

RecognitionOutcome recognise(GroupOracle& G, double epsilon, unsigned N) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument("recognise: epsilon must lie strictly between 0 and 1");
  }
  if (N < 9) {
    throw std::invalid_argument("recognise: the degree bound N must be at least 9");
  }

  RecognitionOutcome out;
  const OpCounters t0 = G.counters();
  const auto finish = [&](RecognitionOutcome::Status status) {
    out.status = status;
    out.counters = G.counters() - t0;
    return out;
  };

  // Each pass fails on a genuine alternating or symmetric group with
  // probability at most 1/4 + 1/8 + 1/8 = 1/2, so ceil(log2(1/epsilon))
  // passes push the overall failure probability below epsilon.
  const std::uint64_t passes =
      static_cast<std::uint64_t>(std::ceil(std::log2(1.0 / epsilon)));
  if (passes == 0) return finish(RecognitionOutcome::Status::fail);

  for (std::uint64_t pass = 0; pass < passes; ++pass) {
    OpCounters snap = G.counters();
    const CandidateResult cands = three_cycle_candidates(G, 0.25, N);
    out.phases.candidates += G.counters() - snap;
    if (cands.status == CandidateResult::Status::impossible) {
      return finish(RecognitionOutcome::Status::fail);
    }
    for (const Element& c : cands.elements) {
      snap = G.counters();
      // Anything that is not of order 3 cannot be a 3-cycle and could
      // never pass the later relator check, so skip it cheaply here.
      if (!has_prime_order(G, c, 3)) {
        out.phases.long_cycle += G.counters() - snap;
        continue;
      }
      const auto lc = construct_long_cycle(G, c, 0.125, N);
      out.phases.long_cycle += G.counters() - snap;
      if (!lc || lc->length < 9 || lc->length > N) continue;

      snap = G.counters();
      const auto sg = standard_generators(G, lc->cycle, c, 0.125, lc->length, N);
      out.phases.standard_generators += G.counters() - snap;
      if (!sg) continue;

      snap = G.counters();
      const auto cert = certify(G, *sg);
      out.phases.certification += G.counters() - snap;
      if (!cert) continue;

      out.degree = sg->degree;
      out.kind = cert->kind;
      out.standard_s = sg->s;
      out.standard_t = sg->t;
      out.bundle = sg->bundle;
      out.generator_images = cert->generator_images;
      return finish(RecognitionOutcome::Status::success);
    }
  }
  return finish(RecognitionOutcome::Status::fail);
}

}  // namespace snap
