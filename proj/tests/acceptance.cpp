// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "artin/artin_group.hpp"
#include "artin/complexes.hpp"
#include "artin/shelling.hpp"
#include "artin/tits.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace artin;

namespace {

// Thrown by require(); the message becomes the failure detail.
struct Failed {
  std::string what;
};

void require(bool ok, const std::string &what) {
  if (!ok)
    throw Failed{what};
}

// ---------------------------------------------------------------- 1

struct ExpectedType {
  Family family;
  int rank;
  int p = 0;
};

// Label-preserving bijection from the reference graph onto the component.
bool witness_ok(const CoxeterDiagram &d, VertexSet component, const TypeLabel &t) {
  CoxeterDiagram ref = family_diagram(t.family, t.rank, t.p);
  if (t.positions.size() != ref.rank() || static_cast<int>(ref.rank()) != popcount(component))
    return false;
  VertexSet image = 0;
  for (Gen g : t.positions)
    image |= bit(g);
  if (image != component)
    return false;
  for (Gen i = 0; i < ref.rank(); ++i)
    for (Gen j = 0; j < ref.rank(); ++j)
      if (ref.label(i, j) != d.label(t.positions[i], t.positions[j]))
        return false;
  return true;
}

void classification() {
  const std::vector<std::pair<std::string, ExpectedType>> finite = {
      {"A1", {Family::A, 1}},      {"A2", {Family::A, 2}},      {"A3", {Family::A, 3}},
      {"A4", {Family::A, 4}},      {"A5", {Family::A, 5}},      {"B2", {Family::B, 2}},
      {"B3", {Family::B, 3}},      {"B4", {Family::B, 4}},      {"D4", {Family::D, 4}},
      {"D5", {Family::D, 5}},      {"I2(5)", {Family::I2, 2, 5}}, {"I2(6)", {Family::I2, 2, 6}},
      {"I2(7)", {Family::I2, 2, 7}}, {"I2(8)", {Family::I2, 2, 8}}, {"F4", {Family::F4, 4}},
      {"H3", {Family::H3, 3}},     {"H4", {Family::H4, 4}},     {"E6", {Family::E6, 6}}};
  for (const auto &[name, want] : finite) {
    CoxeterDiagram d = preset(name);
    FiniteTypeResult r = is_finite_type(d);
    require(r.finite, name + " not classified finite");
    require(r.components.size() == 1 && r.components[0].type, name + ": expected one component");
    const TypeLabel &t = *r.components[0].type;
    require(t.family == want.family && t.rank == want.rank && t.p == want.p,
            name + " classified as " + t.name());
    require(witness_ok(d, r.components[0].vertices, t), name + ": witness is not an isomorphism");
  }

  std::vector<CoxeterDiagram> infinite = {preset("Atilde2"), preset("I2(inf)")};
  // Atilde2 with a tail, the free pair next to A2, and both glued to larger graphs.
  infinite.push_back(CoxeterDiagram({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "a"},
                                                           {"c", "d", 4}}));
  infinite.push_back(
      CoxeterDiagram({"a", "b", "c", "d"}, {{"a", "b", kInfinity}, {"c", "d", 3}}));
  infinite.push_back(CoxeterDiagram({"a", "b", "c", "d", "e"},
                                    {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e", kInfinity},
                                     {"c", "d", 5}}));
  std::mt19937 rng(101);
  for (int i = 0; i < 20; ++i) {
    CoxeterDiagram extra = test_support::random_diagram(rng, 3, {2, 3, 4, 5});
    std::vector<std::string> names = {"x", "y"};
    for (const auto &v : extra.vertices())
      names.push_back(v);
    std::vector<Edge> edges = extra.edges();
    edges.push_back({"x", "y", kInfinity});
    if (i % 2)
      edges.push_back({"y", names[2], 3});
    infinite.emplace_back(names, edges);
  }
  for (const auto &d : infinite)
    require(!is_finite_type(d).finite, "diagram " + diagram_to_json(d) + " classified finite");
}

// ---------------------------------------------------------------- 2

void dihedral_order() {
  for (int p = 3; p <= 10; ++p) {
    CoxeterDiagram d = preset("I2(" + std::to_string(p) + ")");
    auto k = pair_order(d, 0, 1, 1e-9);
    require(k && *k == p, "I2(" + std::to_string(p) + ") pair order " +
                              (k ? std::to_string(*k) : std::string("none")));
  }
}

// ---------------------------------------------------------------- 3

void definite_iff_finite() {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> rank(1, 5);
  int finite_seen = 0;
  for (int i = 0; i < 50; ++i) {
    CoxeterDiagram d = test_support::random_diagram(rng, rank(rng), {2, 3, 4, 5, 6, kInfinity});
    SignatureReport s = signature(bilinear_form(d), 1e-8);
    bool definite = s.zero == 0 && s.negative == 0;
    bool finite = is_finite_type(d).finite;
    finite_seen += finite;
    require(definite == finite, "mismatch on " + diagram_to_json(d));
  }
  require(finite_seen > 0 && finite_seen < 50, "sample did not mix finite and infinite diagrams");
}

// ---------------------------------------------------------------- 4

void orders_and_divisors() {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"A2", 6}, {"B2", 8}, {"I2(5)", 10}, {"A3", 24}, {"B3", 48}, {"H3", 120}};
  for (const auto &[name, order] : cases) {
    ArtinGroup g(preset(name));
    const ArtinMonoid &m = g.monoid();
    Enumeration e = g.coxeter().enumerate(std::nullopt);
    require(e.complete && e.size() == order,
            name + ": |W| = " + std::to_string(e.size()));
    auto left = m.divisors(Side::left, g.delta());
    auto right = m.divisors(Side::right, g.delta());
    require(left.size() == order, name + ": left divisor count " + std::to_string(left.size()));
    require(left == right, name + ": left and right divisors of Delta differ");
    std::vector<MonoidElement> section;
    for (const auto &w : e.flatten()) {
      MonoidElement a = m.canonicalize(w.word);
      require(g.canonical_section(w) == g.embed(a), name + ": section disagrees with embedding");
      section.push_back(a);
    }
    std::sort(section.begin(), section.end(),
              [](const auto &x, const auto &y) { return shortlex_less(x.word, y.word); });
    require(section == left, name + ": divisors of Delta differ from the section image");
  }
}

// ---------------------------------------------------------------- 5

void garside_axioms() {
  for (const char *name : {"A2", "B2"}) {
    ArtinMonoid m(preset(name));
    AxiomReport r = m.verify_garside_axioms(4);
    require(r.checks.size() == 5, std::string(name) + ": expected five checks");
    for (const auto &c : r.checks)
      require(c.status == AxiomCheck::Status::pass,
              std::string(name) + ": " + c.axiom + " " + c.detail);
  }
  ArtinMonoid free_pair(preset("I2(inf)"));
  AxiomReport r = free_pair.verify_garside_axioms(4);
  require(r.passed("(i) cancellative"), "free pair: cancellativity");
  require(r.passed("(ii) length additive"), "free pair: length additivity");
  for (Side side : {Side::left, Side::right}) {
    LcmResult l = free_pair.lcm(free_pair.element("s"), free_pair.element("t"), side);
    require(!l.lcm, "free pair: lcm(s,t) reported");
  }
}

// ---------------------------------------------------------------- 6

std::vector<Word> all_words(std::size_t rank, std::size_t max_length) {
  std::vector<Word> out{{}};
  std::vector<Word> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto &w : layer)
      for (Gen g = 0; g < rank; ++g) {
        Word x = w;
        x.push_back(g);
        next.push_back(std::move(x));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

void normal_forms() {
  for (const char *name : {"A2", "B2", "Atilde2"}) {
    ArtinMonoid m(preset(name));
    std::map<Word, std::vector<VertexSet>> by_class;
    for (const Word &w : all_words(m.diagram().rank(), 6)) {
      const std::string at = std::string(name) + " word " + m.diagram().format_word(w);
      NormalForm nf = m.garside_normal_form(MonoidElement{w});
      require(m.equal(m.from_normal_form(nf).word, w), at + ": normal form does not round-trip");

      // Blocks are listed most significant first; peel them off from the right.
      MonoidElement rest = m.canonicalize(w);
      for (auto it = nf.blocks.rbegin(); it != nf.blocks.rend(); ++it) {
        require(*it == m.length_one_divisors(Side::right, rest),
                at + ": block is not the right descent set");
        auto cofactor = m.divides(Side::right, m.garside_element(*it), rest);
        require(cofactor.has_value(), at + ": block does not divide");
        rest = *cofactor;
      }
      require(rest.is_identity(), at + ": blocks do not exhaust the element");

      for (const Word &v : m.relation_closure(w)) {
        auto [it, fresh] = by_class.try_emplace(v, nf.blocks);
        require(fresh ? true : it->second == nf.blocks, at + ": class members disagree");
      }
    }
  }
}

// ---------------------------------------------------------------- 7

using Signed = std::vector<SignedLetter>;

Signed alternating(Gen s, Gen t, int m) {
  Signed out;
  for (int i = 0; i < m; ++i)
    out.push_back({i % 2 ? t : s, 1});
  return out;
}

Signed inverse(const Signed &w) {
  Signed out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->exponent});
  return out;
}

Signed random_signed(std::mt19937 &rng, std::size_t rank, std::size_t length) {
  std::uniform_int_distribution<int> gen(0, static_cast<int>(rank) - 1), sign(0, 1);
  Signed out;
  for (std::size_t i = 0; i < length; ++i)
    out.push_back({static_cast<Gen>(gen(rng)), sign(rng) ? 1 : -1});
  return out;
}

// Random relator insertions (braid relators, their inverses and rotations,
// trivial pairs) interleaved with free cancellations.
Signed perturb(std::mt19937 &rng, const CoxeterDiagram &d, Signed w) {
  std::uniform_int_distribution<int> op(0, 3), steps(3, 8);
  const std::size_t n = d.rank();
  for (int k = steps(rng); k > 0; --k) {
    auto at = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
    Gen s = static_cast<Gen>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    Gen t = static_cast<Gen>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    Signed ins;
    switch (op(rng)) {
    case 0:
    case 1:
      if (s != t) {
        int m = d.label(s, t);
        ins = alternating(s, t, m);
        Signed back = inverse(alternating(t, s, m));
        ins.insert(ins.end(), back.begin(), back.end());
        if (op(rng) % 2)
          ins = inverse(ins);
        auto r = std::uniform_int_distribution<std::size_t>(0, ins.size() - 1)(rng);
        std::rotate(ins.begin(), ins.begin() + r, ins.end());
      }
      break;
    case 2: {
      int e = op(rng) % 2 ? 1 : -1;
      ins = {{s, e}, {s, -e}};
      break;
    }
    default:
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].gen == w[i + 1].gen && w[i].exponent == -w[i + 1].exponent) {
          w.erase(w.begin() + i, w.begin() + i + 2);
          break;
        }
    }
    w.insert(w.begin() + at, ins.begin(), ins.end());
  }
  return w;
}

// Exponent sums per component of the odd-label graph.
std::vector<long> abel_image(const CoxeterDiagram &d, const Signed &w) {
  std::vector<std::size_t> comp(d.rank());
  std::iota(comp.begin(), comp.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (Gen s = 0; s < d.rank(); ++s)
      for (Gen t = 0; t < d.rank(); ++t) {
        int m = d.label(s, t);
        if (s != t && m != kInfinity && m % 2 == 1 && comp[t] < comp[s]) {
          comp[s] = comp[t];
          changed = true;
        }
      }
  }
  std::vector<long> out(d.rank(), 0);
  for (const auto &l : w)
    out[comp[l.gen]] += l.exponent;
  return out;
}

void group_word_problem() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> len(2, 10);
  for (const char *name : {"A2", "B2"}) {
    ArtinGroup g(preset(name));
    const CoxeterDiagram &d = g.diagram();
    for (int i = 0; i < 200; ++i) {
      Signed u = random_signed(rng, d.rank(), len(rng));
      Signed v = perturb(rng, d, u);
      require(g.from_letters(u) == g.from_letters(v),
              std::string(name) + ": equivalent words judged unequal");
    }
    for (int i = 0; i < 200;) {
      Signed u = random_signed(rng, d.rank(), len(rng));
      Signed v = random_signed(rng, d.rank(), len(rng));
      if (abel_image(d, u) == abel_image(d, v))
        continue;
      require(g.from_letters(u) != g.from_letters(v),
              std::string(name) + ": words with different abelian images judged equal");
      ++i;
    }
    Signed delta, delta_inv;
    for (Gen s : g.delta().word)
      delta.push_back({s, 1});
    delta_inv = inverse(delta);
    for (Gen s = 0; s < d.rank(); ++s) {
      Signed w = delta;
      w.push_back({s, 1});
      w.insert(w.end(), delta_inv.begin(), delta_inv.end());
      require(g.from_letters(w) == g.from_letters({{g.sigma()[s], 1}}),
              std::string(name) + ": Delta s Delta^-1 != sigma(s) for " + d.name(s));
    }
  }
}

// ---------------------------------------------------------------- 8

bool torsion_free(const HomologyResult &h) {
  return std::all_of(h.groups.begin(), h.groups.end(),
                     [](const HomologyGroup &g) { return g.torsion.empty(); });
}

bool is_point(const HomologyResult &h) {
  auto b = h.betti();
  return torsion_free(h) && !b.empty() && b[0] == 1 &&
         std::all_of(b.begin() + 1, b.end(), [](std::size_t x) { return x == 0; });
}

void complexes() {
  auto salvetti = [](const std::string &name) {
    CoxeterGroup g(preset(name));
    return homology(order_complex(salvetti_poset(g, std::nullopt)));
  };
  HomologyResult a1 = salvetti("A1");
  require(a1.to_string() == "H_0 = Z, H_1 = Z", "Salvetti A1: " + a1.to_string());
  for (const char *name : {"I2(3)", "I2(4)"}) {
    HomologyResult h = salvetti(name);
    std::size_t reflections = CoxeterGroup(preset(name)).reflections().size();
    auto b = h.betti();
    require(b.size() >= 2 && b[0] == 1 && b[1] == reflections && torsion_free(h),
            std::string("Salvetti ") + name + ": " + h.to_string());
  }
  for (const char *name : {"A2", "B2", "A3"}) {
    CoxeterGroup g(preset(name));
    HomologyResult h = homology(order_complex(davis_poset(g, std::nullopt)));
    require(is_point(h), std::string("Davis ") + name + ": " + h.to_string());
  }
  for (const char *name : {"A2", "B2", "A3", "Atilde2", "I2(inf)", "H3"}) {
    HomologyResult h = homology(order_complex(deligne_fundamental_domain(preset(name))));
    require(is_point(h), std::string("Deligne domain ") + name + ": " + h.to_string());
  }
  require(salvetti_quotient_cells(preset("A2")).f_vector == std::vector<std::size_t>{1, 2, 1},
          "quotient cells of A2");
  require(salvetti_quotient_cells(preset("Atilde2")).f_vector ==
              std::vector<std::size_t>{1, 3, 3},
          "quotient cells of Atilde2");
}

// ---------------------------------------------------------------- 9

void abelianizations() {
  auto check = [](const CoxeterDiagram &d, std::size_t rank, const std::string &what) {
    AbelianGroup a = abelianization(d);
    require(a.betti == rank && a.torsion.empty(), what + ": got " + a.to_string());
  };
  for (int n = 1; n <= 6; ++n)
    check(preset("A" + std::to_string(n)), 1, "A" + std::to_string(n));
  for (int p = 3; p <= 10; ++p)
    check(preset("I2(" + std::to_string(p) + ")"), p % 2 ? 1 : 2, "I2(" + std::to_string(p) + ")");
  check(preset("B3"), 2, "B3");
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> rank(1, 7);
  for (int i = 0; i < 30; ++i) {
    CoxeterDiagram d = test_support::random_diagram(rng, rank(rng), {2, 3, 4, 5, 6, kInfinity});
    check(d, test_support::odd_label_components(d), diagram_to_json(d));
  }
}

// ---------------------------------------------------------------- 10

void shelling() {
  for (const char *name : {"I2(3)", "I2(4)"}) {
    CoxeterChambers c = coxeter_chamber_complex(CoxeterGroup(preset(name)));
    ClaimsReport r = verify_claims(c.complex, c.index);
    require(r.claim_a && r.claim_b && r.conclusion,
            std::string(name) + ": claims fail on the length ordering");
  }

  // Swap the longest element into level 1: it meets the base chamber nowhere.
  CoxeterChambers hex = coxeter_chamber_complex(CoxeterGroup(preset("I2(3)")));
  IndexFunction bad = hex.index;
  std::size_t top = 0, one = 0;
  for (std::size_t i = 0; i < bad.values.size(); ++i) {
    if (bad.values[i] == 3)
      top = i;
    if (bad.values[i] == 1)
      one = i;
  }
  std::swap(bad.values[top], bad.values[one]);
  ClaimsReport r = verify_claims(hex.complex, bad);
  require(!r.claim_a, "adversarial index passes Claim (A)");
  const LevelResult *failing = nullptr;
  for (const auto &level : r.levels)
    if (!level.claim_a && !failing)
      failing = &level;
  require(failing && failing->a_witness, "Claim (A) failure without a witness");
  const Witness &w = *failing->a_witness;
  require(w.chamber == top, "witness names chamber " + std::to_string(w.chamber));
  // Recompute the attachment: shared vertices with every earlier chamber.
  const auto &cs = hex.complex.chambers;
  std::size_t best = 0;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (bad.values[j] >= bad.values[w.chamber])
      continue;
    VertexList shared;
    std::set_intersection(cs[j].begin(), cs[j].end(), cs[w.chamber].begin(),
                          cs[w.chamber].end(), std::back_inserter(shared));
    best = std::max(best, shared.size());
  }
  require(best == 0 && w.face.empty(), "witness chamber does meet the earlier chambers");

  ChamberComplex tetra{2, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
  std::vector<std::size_t> order = {0, 1, 2, 3};
  int count = 0;
  do {
    ++count;
    require(is_shelling(tetra, order).ok, "tetrahedron order rejected");
  } while (std::next_permutation(order.begin(), order.end()));
  require(count == 24, "expected 24 orders");
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "classification with witnesses", 1, classification},
      {2, "dihedral pair orders", 1, dihedral_order},
      {3, "positive definite iff finite type", 10, definite_iff_finite},
      {4, "group orders and divisors of Delta", 120, orders_and_divisors},
      {5, "Garside axioms", 60, garside_axioms},
      {6, "normal form soundness", 120, normal_forms},
      {7, "group word problem", 60, group_word_problem},
      {8, "complex homology and quotient cells", 60, complexes},
      {9, "abelianization", 5, abelianizations},
      {10, "shelling claims", 5, shelling},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const Failed &f) {
      detail = f.what;
    } catch (const std::exception &e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && seconds >= c.limit_seconds)
      detail = "over the time limit";
    bool ok = detail.empty();
    failures += !ok;
    std::printf("%s %2d %-38s %8.3f s (limit %g s)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), seconds, c.limit_seconds, ok ? "" : ": ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
