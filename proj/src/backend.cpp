#include "snap/backend.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>

#include <nlohmann/json.hpp>

namespace snap {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::alt(std::uint32_t n) {
  GroupSpec s;
  s.kind = Kind::alt;
  s.degree = n;
  return s;
}

GroupSpec GroupSpec::sym(std::uint32_t n) {
  GroupSpec s;
  s.kind = Kind::sym;
  s.degree = n;
  return s;
}

GroupSpec GroupSpec::from_generators(std::vector<Permutation> gens) {
  if (gens.empty()) throw GroupFileError("generator list must be non-empty");
  for (const auto& g : gens)
    if (g.degree() != gens.front().degree())
      throw GroupFileError("generators must share one degree");
  GroupSpec s;
  s.kind = Kind::generators;
  s.degree = static_cast<std::uint32_t>(gens.front().degree());
  s.generator_list = std::move(gens);
  return s;
}

std::uint32_t GroupSpec::natural_degree() const { return degree; }

GroupSpec GroupSpec::parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw GroupFileError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw GroupFileError("group file must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw GroupFileError("group file needs a string field \"kind\"");
  const std::string kind = j["kind"].get<std::string>();

  GroupSpec spec;
  if (kind == "alt" || kind == "sym") {
    if (!j.contains("degree") || !j["degree"].is_number_unsigned())
      throw GroupFileError("alt/sym group files need an unsigned \"degree\"");
    std::uint32_t n = j["degree"].get<std::uint32_t>();
    if (n < 1) throw GroupFileError("degree must be at least 1");
    spec = kind == "alt" ? GroupSpec::alt(n) : GroupSpec::sym(n);
  } else if (kind == "generators") {
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
      throw GroupFileError("generator group files need a non-empty \"generators\" array");
    std::vector<Permutation> gens;
    for (const auto& arr : j["generators"]) {
      if (!arr.is_array()) throw GroupFileError("each generator must be an image array");
      std::vector<std::uint32_t> img;
      for (const auto& v : arr) {
        if (!v.is_number_unsigned()) throw GroupFileError("generator images must be positive integers");
        img.push_back(v.get<std::uint32_t>());
      }
      try {
        gens.push_back(Permutation::from_image_list(img));
      } catch (const std::invalid_argument& e) {
        throw GroupFileError(std::string("bad generator image list: ") + e.what());
      }
    }
    spec = GroupSpec::from_generators(std::move(gens));
    if (j.contains("degree") && j["degree"].is_number_unsigned() &&
        j["degree"].get<std::uint32_t>() != spec.degree)
      throw GroupFileError("declared degree does not match generator degree");
  } else {
    throw GroupFileError("kind must be one of \"alt\", \"sym\", \"generators\"");
  }

  if (j.contains("shroud")) {
    const auto& sh = j["shroud"];
    if (!sh.is_object()) throw GroupFileError("\"shroud\" must be an object");
    ShroudOptions opts;
    if (sh.contains("seed")) {
      if (!sh["seed"].is_number_unsigned()) throw GroupFileError("shroud seed must be unsigned");
      opts.seed = sh["seed"].get<std::uint64_t>();
    }
    if (sh.contains("padding")) {
      if (!sh["padding"].is_number_unsigned()) throw GroupFileError("shroud padding must be unsigned");
      opts.padding = sh["padding"].get<std::uint32_t>();
    }
    spec.shroud = opts;
  }
  return spec;
}

std::string GroupSpec::to_json() const {
  ordered_json j;
  switch (kind) {
    case Kind::alt: j["kind"] = "alt"; break;
    case Kind::sym: j["kind"] = "sym"; break;
    case Kind::generators: j["kind"] = "generators"; break;
  }
  j["degree"] = degree;
  if (kind == Kind::generators) {
    ordered_json arr = ordered_json::array();
    for (const auto& g : generator_list) arr.push_back(g.image_list());
    j["generators"] = arr;
  }
  if (shroud) {
    ordered_json sh = ordered_json::object();
    if (shroud->seed) sh["seed"] = *shroud->seed;
    sh["padding"] = shroud->padding;
    j["shroud"] = sh;
  }
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Bundled negative-control groups

GroupSpec cyclic_spec(std::uint32_t n) {
  std::vector<std::uint32_t> cyc(n);
  for (std::uint32_t i = 0; i < n; ++i) cyc[i] = i + 1;
  return GroupSpec::from_generators({Permutation::from_cycles(n, {cyc})});
}

GroupSpec dihedral_spec(std::uint32_t n) {
  std::vector<std::uint32_t> cyc(n);
  std::vector<std::uint32_t> flip(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    cyc[i] = i + 1;
    flip[i] = n - i;  // i+1 -> n-i
  }
  return GroupSpec::from_generators(
      {Permutation::from_cycles(n, {cyc}), Permutation::from_image_list(flip)});
}

GroupSpec psl_2_8_spec() {
  // Action on the projective line over F_8 (points 1..8 are the field
  // elements with x^3 = x + 1, point 9 is infinity).
  auto t = Permutation::from_cycles(9, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  auto m = Permutation::from_cycles(9, {{2, 3, 5, 4, 7, 8, 6}});
  auto i = Permutation::from_cycles(9, {{1, 9}, {3, 6}, {5, 8}, {4, 7}});
  return GroupSpec::from_generators({t, m, i});
}

GroupSpec m11_spec() {
  auto a = Permutation::from_cycles(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
  auto b = Permutation::from_cycles(11, {{3, 7, 11, 8}, {4, 10, 5, 6}});
  return GroupSpec::from_generators({a, b});
}

// ---------------------------------------------------------------------------
// Elements

PermElementRep::PermElementRep(Permutation p, std::shared_ptr<ElementStats> stats)
    : m_perm(std::move(p)), m_stats(std::move(stats)) {
  ++m_stats->live;
  ++m_stats->created;
  m_stats->peak = std::max(m_stats->peak, m_stats->live);
}

PermElementRep::~PermElementRep() { --m_stats->live; }

const Permutation& as_permutation(const Element& e) {
  const auto* rep = dynamic_cast<const PermElementRep*>(e.rep());
  if (!rep) throw std::logic_error("element does not belong to a permutation oracle");
  return rep->perm();
}

namespace {

Element make_element(Permutation p, const std::shared_ptr<ElementStats>& stats) {
  return Element(std::make_shared<PermElementRep>(std::move(p), stats));
}

Permutation extend_to(const Permutation& p, std::uint32_t emb_degree) {
  if (p.degree() == emb_degree) return p;
  std::vector<std::uint32_t> img(emb_degree);
  for (std::uint32_t i = 0; i < emb_degree; ++i) img[i] = i;
  const auto& raw = p.raw();
  for (std::size_t i = 0; i < raw.size(); ++i) img[i] = raw[i];
  return Permutation(std::move(img));
}

Permutation dress_perm(const Permutation& inner, const Permutation& relabel,
                       std::uint32_t emb_degree) {
  return extend_to(inner, emb_degree).conjugated_by(relabel);
}

std::vector<Permutation> natural_generators(const GroupSpec& spec) {
  const std::uint32_t n = spec.natural_degree();
  switch (spec.kind) {
    case GroupSpec::Kind::generators:
      return spec.generator_list;
    case GroupSpec::Kind::alt: {
      if (n < 3) return {Permutation(n)};
      auto [s, t] = standard_generators_perm(n);
      return {t, s};
    }
    case GroupSpec::Kind::sym: {
      if (n < 2) return {Permutation(n)};
      std::vector<std::uint32_t> cyc(n);
      for (std::uint32_t i = 0; i < n; ++i) cyc[i] = i + 1;
      return {Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, {cyc})};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

// ---------------------------------------------------------------------------
// PermOracle

PermOracle::PermOracle(const GroupSpec& spec, Permutation relabel, std::uint32_t emb_degree,
                       std::uint64_t sample_seed, std::shared_ptr<ElementStats> stats,
                       std::vector<Element> dressed_gens, Element id)
    : GroupOracle(std::move(id), std::move(dressed_gens)),
      m_kind(spec.kind),
      m_inner_degree(spec.natural_degree()),
      m_emb_degree(emb_degree),
      m_relabel(std::move(relabel)),
      m_rng(sample_seed),
      m_stats(std::move(stats)) {
  if (m_kind == GroupSpec::Kind::generators) m_table = enumerate_closure(spec.generator_list);
}

std::unique_ptr<PermOracle> PermOracle::create(const GroupSpec& spec, const Permutation& relabel,
                                               std::uint32_t emb_degree,
                                               std::uint64_t sample_seed) {
  if (emb_degree < spec.natural_degree())
    throw GroupFileError("embedding degree must not be below the natural degree");
  if (relabel.degree() != emb_degree)
    throw GroupFileError("relabeling degree must equal the embedding degree");
  auto stats = std::make_shared<ElementStats>();
  Element id = make_element(Permutation(emb_degree), stats);
  std::vector<Element> gens;
  for (const auto& g : natural_generators(spec))
    gens.push_back(make_element(dress_perm(g, relabel, emb_degree), stats));
  return std::unique_ptr<PermOracle>(new PermOracle(spec, relabel, emb_degree, sample_seed,
                                                    std::move(stats), std::move(gens),
                                                    std::move(id)));
}

Element PermOracle::wrap(Permutation p) {
  if (p.degree() != m_emb_degree)
    throw std::invalid_argument("wrap: degree does not match the oracle");
  return make_element(std::move(p), m_stats);
}

Permutation PermOracle::dress(const Permutation& inner) const {
  return dress_perm(inner, m_relabel, m_emb_degree);
}

Element PermOracle::do_multiply(const Element& a, const Element& b) {
  return make_element(as_permutation(a).compose(as_permutation(b)), m_stats);
}

Element PermOracle::do_invert(const Element& a) {
  return make_element(as_permutation(a).inverse(), m_stats);
}

bool PermOracle::do_equal(const Element& a, const Element& b) {
  return as_permutation(a) == as_permutation(b);
}

Element PermOracle::do_random() {
  switch (m_kind) {
    case GroupSpec::Kind::alt:
      return make_element(dress(m_rng.uniform_even_perm(m_inner_degree)), m_stats);
    case GroupSpec::Kind::sym:
      return make_element(dress(m_rng.uniform_perm(m_inner_degree)), m_stats);
    case GroupSpec::Kind::generators:
      return make_element(dress(m_table[m_rng.below(m_table.size())]), m_stats);
  }
  throw std::logic_error("unreachable");
}

std::unique_ptr<PermOracle> shroud_oracle(const GroupSpec& spec, std::uint64_t run_seed) {
  const std::uint32_t n = spec.natural_degree();
  const std::uint32_t pad = spec.shroud ? spec.shroud->padding : 0;
  const std::uint32_t emb = n + pad;
  RandomStream root(run_seed);
  RandomStream relabel_stream = (spec.shroud && spec.shroud->seed)
                                    ? RandomStream(*spec.shroud->seed)
                                    : root.split("shroud");
  Permutation relabel = relabel_stream.uniform_perm(emb);
  return PermOracle::create(spec, relabel, emb, root.split("sample").seed());
}

std::unique_ptr<PermOracle> natural_oracle(const GroupSpec& spec, std::uint64_t seed) {
  const std::uint32_t n = spec.natural_degree();
  return PermOracle::create(spec, Permutation(n), n, seed);
}

// ---------------------------------------------------------------------------
// Closure enumeration

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::vector<Permutation> enumerate_closure(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) throw GroupFileError("closure of an empty generator list");
  const std::size_t n = gens.front().degree();
  std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
  std::deque<Permutation> queue;
  std::vector<Permutation> out;

  Permutation id(n);
  seen.insert(id.raw());
  out.push_back(id);
  queue.push_back(id);

  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation next = cur.compose(g);
      if (seen.insert(next.raw()).second) {
        if (out.size() >= cap) throw GroupFileError("generator closure exceeds the element cap");
        out.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Standard generators and the matching-cycle test

std::pair<Permutation, Permutation> standard_generators_perm(std::size_t n) {
  if (n < 3) throw std::invalid_argument("standard generators need degree at least 3");
  std::vector<std::uint32_t> tail;
  for (std::uint32_t i = 3; i <= n; ++i) tail.push_back(i);
  Permutation s = (n % 2 == 1) ? Permutation::from_cycles(n, {tail})
                               : Permutation::from_cycles(n, {{1, 2}, tail});
  Permutation t = Permutation::from_cycles(n, {{1, 2, 3}});
  return {s, t};
}

bool standard_pair_presentation(const Permutation& s, const Permutation& t, std::size_t n) {
  if (n < 5) throw std::invalid_argument("presentation check needs degree at least 5");
  if (s.degree() != t.degree()) return false;
  if (!s.power(static_cast<long long>(n) - 2).is_identity()) return false;
  if (!t.power(3).is_identity()) return false;
  const Permutation st = s.compose(t);
  const bool even = n % 2 == 0;
  if (!st.power(static_cast<long long>(even ? n - 1 : n)).is_identity()) return false;

  const Permutation t_inv = t.inverse();
  const std::size_t k_max = even ? (n - 2) / 2 : (n - 3) / 2;
  Permutation u = t;  // s^{-k} t s^k, maintained incrementally
  for (std::size_t k = 1; k <= k_max; ++k) {
    u = u.conjugated_by(s);
    const Permutation& head = (even && k % 2 == 1) ? t_inv : t;
    if (!head.compose(u).power(2).is_identity()) return false;
  }
  return true;
}

bool is_matching_cycle(const Permutation& g, const Permutation& c, std::size_t k) {
  if (k < 5) return false;
  if (!g.is_cycle_of_length(k) || !c.is_cycle_of_length(3)) return false;
  if (g.degree() != c.degree()) return false;
  for (std::uint32_t pt : c.support())
    if (g.image(pt) == pt) return false;  // supp c must lie inside supp g
  const Permutation s = g.compose(c.power(2));
  return standard_pair_presentation(s, c, k);
}

}  // namespace snap
