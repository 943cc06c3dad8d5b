#include "snap/isomap.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "snap/backend.hpp"

namespace snap {

namespace {

// x^{-1} e x with the inverse already at hand: two multiplications.
Element conj_pre(GroupOracle& G, const Element& e, const Element& x, const Element& x_inv) {
  return G.multiply(G.multiply(x_inv, e), x);
}

// Appends the letters of g_m^{±1}, where g_m = (1,2,m) = (t^e)^{s^{m-3}}
// with e = -1 exactly when the degree is even and m-3 is odd (the
// transposition part of s then flips 1 and 2 an odd number of times).
void append_gm(Word& word, std::uint32_t m, bool inverse, std::size_t degree) {
  const std::uint32_t shift = m - 3;
  bool t_inverted = inverse;
  if (degree % 2 == 0 && shift % 2 == 1) t_inverted = !t_inverted;
  word.insert(word.end(), shift, WordLetter::s_inv);
  word.push_back(t_inverted ? WordLetter::t_inv : WordLetter::t);
  word.insert(word.end(), shift, WordLetter::s);
}

// Appends the letters of the 3-cycle (a,b,c), using the identities
// (1,a,b) = g_a^{-1} g_b, (2,a,b) = g_a g_b^{-1} and, for a cycle
// avoiding 1 and 2, (a,b,c) = (1,b,c)(1,a,b).
void append_three_cycle(Word& word, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                        std::size_t degree) {
  while (!(a < b && a < c)) {  // rotate so the smallest point leads
    const std::uint32_t tmp = a;
    a = b;
    b = c;
    c = tmp;
  }
  if (a == 1) {
    if (b == 2) {
      append_gm(word, c, false, degree);
    } else if (c == 2) {
      append_gm(word, b, true, degree);
    } else {
      append_gm(word, b, true, degree);
      append_gm(word, c, false, degree);
    }
  } else if (a == 2) {
    append_gm(word, b, false, degree);
    append_gm(word, c, true, degree);
  } else {
    append_gm(word, b, true, degree);
    append_gm(word, c, false, degree);
    append_gm(word, a, true, degree);
    append_gm(word, b, false, degree);
  }
}

}  // namespace

Element evaluate_word(GroupOracle& G, const Word& word, const Element& s, const Element& t) {
  Element acc = G.identity();
  std::optional<Element> s_inv;
  std::optional<Element> t_inv;
  for (const WordLetter letter : word) {
    switch (letter) {
      case WordLetter::s:
        acc = G.multiply(acc, s);
        break;
      case WordLetter::s_inv:
        if (!s_inv) s_inv = G.invert(s);
        acc = G.multiply(acc, *s_inv);
        break;
      case WordLetter::t:
        acc = G.multiply(acc, t);
        break;
      case WordLetter::t_inv:
        if (!t_inv) t_inv = G.invert(t);
        acc = G.multiply(acc, *t_inv);
        break;
    }
  }
  return acc;
}

Permutation evaluate_word_perm(const Word& word, const Permutation& s, const Permutation& t) {
  Permutation acc(s.degree());
  std::optional<Permutation> s_inv;
  std::optional<Permutation> t_inv;
  for (const WordLetter letter : word) {
    switch (letter) {
      case WordLetter::s:
        acc = acc.compose(s);
        break;
      case WordLetter::s_inv:
        if (!s_inv) s_inv = s.inverse();
        acc = acc.compose(*s_inv);
        break;
      case WordLetter::t:
        acc = acc.compose(t);
        break;
      case WordLetter::t_inv:
        if (!t_inv) t_inv = t.inverse();
        acc = acc.compose(*t_inv);
        break;
    }
  }
  return acc;
}

Word perm_to_standard_word(const Permutation& p) {
  if (!p.is_even()) {
    throw std::invalid_argument(
        "perm_to_standard_word: an odd permutation is not a word in the standard pair");
  }
  Word word;
  if (p.is_identity()) return word;
  const std::size_t n = p.degree();

  // Sift: right-multiply by correction 3-cycles until only {1,2,3} can
  // move.  tau = (v,u,w) sends the current image v of u back to u; points
  // above u stay fixed because v < u and w <= 3.
  std::vector<std::uint32_t> q = p.image_list();
  std::vector<std::array<std::uint32_t, 3>> taus;
  for (std::uint32_t u = static_cast<std::uint32_t>(n); u >= 4; --u) {
    const std::uint32_t v = q[u - 1];
    if (v == u) continue;
    const std::uint32_t w = (v == 1) ? 2 : 1;
    taus.push_back({v, u, w});
    for (std::uint32_t& image : q) {
      if (image == v) {
        image = u;
      } else if (image == u) {
        image = w;
      } else if (image == w) {
        image = v;
      }
    }
  }

  // p = residual * taus_r^{-1} * ... * taus_1^{-1}; the residual is an
  // even permutation of {1,2,3}.
  if (q[0] == 2) {
    word.push_back(WordLetter::t);
  } else if (q[0] == 3) {
    word.push_back(WordLetter::t_inv);
  }
  for (auto it = taus.rbegin(); it != taus.rend(); ++it) {
    append_three_cycle(word, (*it)[0], (*it)[2], (*it)[1], n);
  }
  return word;
}

bool point_in_support(GroupOracle& G, const MatchingCycleBundle& bundle, std::uint64_t i,
                      const Element& h) {
  if (i < 3 || i > bundle.length) {
    throw std::invalid_argument("point_in_support: only points 3..length are observable");
  }
  const Element ci =
      conjugate(G, bundle.three_cycle, power(G, bundle.cycle, BigInt(i - 3)));
  return !is_fixed_point(G, bundle.cycle, ci, h);
}

namespace {

/// Measures the permutation induced on bundle coordinates by arbitrary
/// query elements.  Construction precomputes the shifted 3-cycles
/// c_j = c^{(g^{j-3})} and one support probe per observable point, so
/// each query costs O(length^2) group operations.
class ImageEvaluator {
public:
  ImageEvaluator(GroupOracle& G, const MatchingCycleBundle& bundle)
      : m_G(&G),
        m_bundle(&bundle),
        m_k(bundle.length),
        m_n(bundle.length + (bundle.storage ? 1 : 0)) {
    const Element& g = bundle.cycle;
    m_g_inv = G.invert(g);
    m_g2 = G.multiply(g, g);
    m_cj.reserve(m_k - 2);
    m_probes.reserve(m_k - 2);
    Element cj = bundle.three_cycle;
    for (std::uint64_t j = 3; j <= m_k; ++j) {
      if (j > 3) cj = conj_pre(G, cj, g, m_g_inv);
      m_cj.push_back(cj);
      m_probes.emplace_back(G, g, cj);
    }
  }

  std::uint64_t degree() const { return m_n; }

  std::optional<Permutation> evaluate(const Element& x) const {
    GroupOracle& G = *m_G;
    const Element x_inv = G.invert(x);

    // S[j]: observable support of c_j^x.  supp c_j = {j-2, j-1, j}, so
    // consecutive rows two apart overlap exactly in the image of j.
    std::vector<std::vector<std::uint64_t>> S(m_k + 1);
    for (std::uint64_t j = 3; j <= m_k; ++j) {
      S[j] = moved_points(conj_pre(G, m_cj[j - 3], x, x_inv));
    }
    std::vector<std::uint64_t> img(m_k + 1, 0);  // 0 = not yet visible
    for (std::uint64_t j = 3; j + 2 <= m_k; ++j) {
      std::uint64_t found = 0;
      for (const std::uint64_t v : S[j]) {
        if (std::find(S[j + 2].begin(), S[j + 2].end(), v) != S[j + 2].end()) {
          if (found != 0) return std::nullopt;
          found = v;
        }
      }
      img[j] = found;
    }

    // Boundary points share a row with two points whose images are
    // already known (an invisible image subtracts nothing, correctly so,
    // because invisible images never appear in a measured row).
    if (!leftover(S, img, m_k - 1, m_k - 3, m_k - 2, m_k - 1)) return std::nullopt;
    if (!leftover(S, img, m_k, m_k - 2, m_k - 1, m_k)) return std::nullopt;
    if (!leftover(S, img, 4, 3, 4, 2)) return std::nullopt;
    if (!leftover(S, img, 3, 2, 3, 1)) return std::nullopt;

    // Invisible images lie in {1, 2, storage point}: at most three.
    std::uint64_t invisible = 0;
    for (std::uint64_t j = 1; j <= m_k; ++j) {
      if (img[j] == 0) ++invisible;
    }
    if (invisible > 3) return std::nullopt;

    // Shifting by g^{j-3} x g^2 turns the invisible image of j into the
    // image of 3: point 3 when j maps to 1, point 4 when j maps to 2,
    // still invisible when j maps to the storage point.
    std::uint64_t parked = 0;
    for (std::uint64_t j = 1; j <= m_k; ++j) {
      if (img[j] != 0) continue;
      const Element gp = (j >= 3) ? power(G, m_bundle->cycle, BigInt(j - 3))
                                  : power(G, m_g_inv, BigInt(3 - j));
      const Element shift = G.multiply(G.multiply(gp, x), m_g2);
      const Element shift_inv = G.invert(shift);
      const std::vector<std::uint64_t> s3 =
          moved_points(conj_pre(G, m_cj[0], shift, shift_inv));
      const std::vector<std::uint64_t> s5 =
          moved_points(conj_pre(G, m_cj[2], shift, shift_inv));
      std::uint64_t found = 0;
      for (const std::uint64_t v : s3) {
        if (std::find(s5.begin(), s5.end(), v) != s5.end()) {
          if (found != 0) return std::nullopt;
          found = v;
        }
      }
      if (found == 3) {
        img[j] = 1;
      } else if (found == 4) {
        img[j] = 2;
      } else if (found == 0) {
        if (parked != 0 || !m_bundle->storage) return std::nullopt;
        parked = j;
      } else {
        return std::nullopt;
      }
    }
    if (parked != 0) img[parked] = m_n;

    std::vector<std::uint32_t> images1(m_n, 0);
    std::vector<char> used(m_n + 1, 0);
    for (std::uint64_t j = 1; j <= m_k; ++j) {
      const std::uint64_t v = img[j];
      if (v == 0 || v > m_n || used[v] != 0) return std::nullopt;
      used[v] = 1;
      images1[j - 1] = static_cast<std::uint32_t>(v);
    }
    if (m_bundle->storage) {
      // The storage point takes the one value no measured point took.
      std::uint64_t missing = 0;
      for (std::uint64_t v = 1; v <= m_n; ++v) {
        if (used[v] == 0) {
          missing = v;
          break;
        }
      }
      images1[m_n - 1] = static_cast<std::uint32_t>(missing);
    }
    return Permutation::from_image_list(images1);
  }

private:
  std::vector<std::uint64_t> moved_points(const Element& e) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 3; i <= m_k; ++i) {
      if (!m_probes[i - 3].fixes_distinguished_point(e)) out.push_back(i);
    }
    return out;
  }

  bool leftover(const std::vector<std::vector<std::uint64_t>>& S, std::vector<std::uint64_t>& img,
                std::uint64_t row, std::uint64_t a, std::uint64_t b, std::uint64_t j) const {
    std::uint64_t found = 0;
    for (const std::uint64_t v : S[row]) {
      if (v == img[a] || v == img[b]) continue;
      if (found != 0) return false;
      found = v;
    }
    img[j] = found;
    return true;
  }

  GroupOracle* m_G;
  const MatchingCycleBundle* m_bundle;
  std::uint64_t m_k;
  std::uint64_t m_n;
  Element m_g_inv;
  Element m_g2;
  std::vector<Element> m_cj;
  std::vector<PointProbe> m_probes;
};

// Relabeling that carries measured bundle images to the standard
// generator convention: measured lambda(s) is (1,4,5,...,n) in the odd
// case and (1,n)(2,...,n-1) in the even case, and conjugating by tau
// turns these (and the measured lambda(t)) into the standard pair.
Permutation bundle_to_standard_relabel(bool has_storage, std::uint64_t degree) {
  if (!has_storage) {
    return Permutation::from_cycles(degree, {{1, 3, 2}});
  }
  std::vector<std::uint32_t> images(degree);
  for (std::uint64_t i = 1; i < degree; ++i) {
    images[i - 1] = static_cast<std::uint32_t>(i + 1);
  }
  images[degree - 1] = 1;
  return Permutation::from_image_list(images);
}

}  // namespace

Permutation evaluate_image(GroupOracle& G, const MatchingCycleBundle& bundle, const Element& x) {
  if (bundle.length < 9) {
    throw std::invalid_argument("evaluate_image: bundle cycle is shorter than 9 points");
  }
  const ImageEvaluator evaluator(G, bundle);
  auto image = evaluator.evaluate(x);
  if (!image) {
    throw InconsistentImage("support measurements admit no permutation of bundle coordinates");
  }
  return *std::move(image);
}

std::uint64_t image_of_point(GroupOracle& G, const MatchingCycleBundle& bundle, const Element& x,
                             std::uint64_t j) {
  const std::uint64_t degree = bundle.length + (bundle.storage ? 1 : 0);
  if (j < 1 || j > degree) {
    throw std::invalid_argument("image_of_point: point outside bundle coordinates");
  }
  return evaluate_image(G, bundle, x).image(static_cast<std::uint32_t>(j));
}

std::optional<Certification> certify(GroupOracle& G, const StandardGeneratorsResult& sg) {
  const std::uint64_t n = sg.degree;
  if (n < 9 || sg.bundle.length < 9) return std::nullopt;
  // The relators plus a nontrivial t force <s,t> isomorphic to Alt_n, so
  // the certificate below stands on its own even when the inputs did not
  // come from standard_generators.
  if (is_identity(G, sg.t) || !check_carmichael_presentation(G, sg.s, sg.t, n)) {
    return std::nullopt;
  }
  const ImageEvaluator evaluator(G, sg.bundle);
  const Permutation tau = bundle_to_standard_relabel(sg.bundle.storage.has_value(), n);
  const auto standard = standard_generators_perm(n);

  const std::vector<Element>& gens = G.generators();
  std::vector<Permutation> images;
  images.reserve(gens.size());
  for (const Element& x : gens) {
    auto raw = evaluator.evaluate(x);
    if (!raw) return std::nullopt;
    images.push_back(raw->conjugated_by(tau));
  }

  // Re-derive each generator from its image as a word in the standard
  // generator pair and confirm equality through the oracle.
  const auto matches_word = [&](const Permutation& target, const Element& elem) {
    return G.equal(evaluate_word(G, perm_to_standard_word(target), sg.s, sg.t), elem);
  };

  std::optional<std::size_t> odd_ref;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i].is_even()) {
      odd_ref = i;
      break;
    }
  }

  if (!odd_ref) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!matches_word(images[i], gens[i])) return std::nullopt;
    }
    return Certification{RecognisedKind::alternating, std::move(images)};
  }

  // An odd image makes the group symmetric.  The reference generator x0
  // is pinned by verifying x0^2 and the conjugation action of x0 on the
  // standard pair; other odd generators reduce to even ones via x0.
  const Element& x0 = gens[*odd_ref];
  const Permutation& pi0 = images[*odd_ref];
  if (!matches_word(pi0.compose(pi0), G.multiply(x0, x0))) return std::nullopt;
  if (!matches_word(standard.first.conjugated_by(pi0), conjugate(G, sg.s, x0))) {
    return std::nullopt;
  }
  if (!matches_word(standard.second.conjugated_by(pi0), conjugate(G, sg.t, x0))) {
    return std::nullopt;
  }
  const Element x0_inv = G.invert(x0);
  const Permutation pi0_inv = pi0.inverse();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (images[i].is_even()) {
      if (!matches_word(images[i], gens[i])) return std::nullopt;
    } else if (i != *odd_ref) {
      if (!matches_word(images[i].compose(pi0_inv), G.multiply(gens[i], x0_inv))) {
        return std::nullopt;
      }
    }
  }
  return Certification{RecognisedKind::symmetric, std::move(images)};
}

std::optional<Certification> certify(GroupOracle& G, const RecognitionOutcome& outcome) {
  if (outcome.status != RecognitionOutcome::Status::success || !outcome.bundle) {
    return std::nullopt;
  }
  StandardGeneratorsResult sg;
  sg.s = outcome.standard_s;
  sg.t = outcome.standard_t;
  sg.degree = outcome.degree;
  sg.bundle = *outcome.bundle;
  return certify(G, sg);
}

}  // namespace snap
