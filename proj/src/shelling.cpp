#include "artin/shelling.hpp"
#include "artin/error.hpp"
#include "artin/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace artin {

using nlohmann::ordered_json;

namespace {

VertexList sorted(VertexList v) {
  std::sort(v.begin(), v.end());
  return v;
}

VertexList intersect(const VertexList &a, const VertexList &b) {
  VertexList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const VertexList &a, const VertexList &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct Attachment {
  std::vector<VertexList> maximal; ///< maximal shared faces
};

/// The faces of `chamber` lying in the union of `others`, as maximal vertex sets.
Attachment attach(const VertexList &chamber, const std::vector<const VertexList *> &others) {
  std::vector<VertexList> shared;
  for (const VertexList *o : others) {
    VertexList s = intersect(chamber, *o);
    if (!s.empty())
      shared.push_back(std::move(s));
  }
  std::sort(shared.begin(), shared.end(), [](const VertexList &a, const VertexList &b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
  Attachment out;
  for (auto &s : shared)
    if (std::none_of(out.maximal.begin(), out.maximal.end(),
                     [&](const VertexList &m) { return subset(s, m); }))
      out.maximal.push_back(std::move(s));
  std::sort(out.maximal.begin(), out.maximal.end());
  return out;
}

/// Claim (A) for one chamber: a nonempty union of codimension-one faces.
std::optional<Witness> check_attachment(std::size_t index, const VertexList &chamber,
                                        const Attachment &att) {
  if (att.maximal.empty())
    return Witness{index, std::nullopt, {}, "meets the earlier union in nothing"};
  for (const auto &f : att.maximal)
    if (f.size() + 1 != chamber.size())
      return Witness{index, std::nullopt, f,
                     f.size() == chamber.size()
                         ? "chamber already lies in the earlier union"
                         : "maximal shared face has dimension " +
                               std::to_string(static_cast<long long>(f.size()) - 1)};
  return std::nullopt;
}

ordered_json witness_json(const std::optional<Witness> &w) {
  if (!w)
    return nullptr;
  ordered_json j;
  j["chamber"] = w->chamber;
  j["other"] = w->other ? ordered_json(*w->other) : ordered_json(nullptr);
  j["face"] = w->face;
  j["reason"] = w->reason;
  return j;
}

} // namespace

void ChamberComplex::validate() const {
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    VertexList v = sorted(chambers[i]);
    if (v.size() != n + 1 || std::adjacent_find(v.begin(), v.end()) != v.end())
      throw ShellingInputError("chamber " + std::to_string(i) + " is not an n-simplex with " +
                               std::to_string(n + 1) + " distinct vertices");
  }
}

void IndexFunction::validate(const ChamberComplex &cc) const {
  if (values.size() != cc.chambers.size())
    throw ShellingInputError("index function must assign a value to every chamber");
  if (std::count(values.begin(), values.end(), std::size_t{0}) != 1)
    throw ShellingInputError("exactly one chamber must have index 0");
}

std::size_t IndexFunction::base() const {
  return static_cast<std::size_t>(std::find(values.begin(), values.end(), 0) - values.begin());
}

std::size_t IndexFunction::max() const {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

std::vector<VertexList> build_filtration(const ChamberComplex &cc, const IndexFunction &l,
                                         std::size_t k) {
  cc.validate();
  l.validate(cc);
  std::vector<VertexList> out;
  for (std::size_t i = 0; i < cc.chambers.size(); ++i)
    if (l.values[i] <= k)
      out.push_back(sorted(cc.chambers[i]));
  return out;
}

ClaimsReport verify_claims(const ChamberComplex &cc, const IndexFunction &l, Execution exec) {
  cc.validate();
  l.validate(cc);
  std::vector<VertexList> ch;
  for (const auto &c : cc.chambers)
    ch.push_back(sorted(c));

  ClaimsReport report;
  report.n = cc.n;
  const std::size_t top = l.max();
  std::vector<std::vector<std::size_t>> at_level(top + 1);
  for (std::size_t i = 0; i < ch.size(); ++i)
    at_level[l.values[i]].push_back(i);

  struct Outcome {
    LevelResult result;
    std::vector<std::size_t> full;
  };
  auto outcomes = tabulate<Outcome>(
      top,
      [&](std::size_t k) {
        Outcome o;
        o.result.level = k;
        o.result.chambers = at_level[k + 1];
        std::vector<const VertexList *> below;
        for (std::size_t i = 0; i < ch.size(); ++i)
          if (l.values[i] <= k)
            below.push_back(&ch[i]);
        for (std::size_t i : at_level[k + 1]) {
          Attachment att = attach(ch[i], below);
          if (auto w = check_attachment(i, ch[i], att)) {
            if (o.result.claim_a) {
              o.result.claim_a = false;
              o.result.a_witness = std::move(w);
            }
          } else if (att.maximal.size() == ch[i].size()) {
            o.full.push_back(i);
          }
        }
        const auto &same = at_level[k + 1];
        for (std::size_t x = 0; x < same.size() && o.result.claim_b; ++x)
          for (std::size_t y = x + 1; y < same.size() && o.result.claim_b; ++y) {
            VertexList s = intersect(ch[same[x]], ch[same[y]]);
            if (s.empty())
              continue;
            bool inside = std::any_of(below.begin(), below.end(),
                                      [&](const VertexList *b) { return subset(s, *b); });
            if (!inside) {
              o.result.claim_b = false;
              o.result.b_witness = Witness{same[x], same[y], s,
                                           "shared face is not contained in the earlier union"};
            }
          }
        return o;
      },
      exec);

  for (auto &o : outcomes) {
    report.claim_a = report.claim_a && o.result.claim_a;
    report.claim_b = report.claim_b && o.result.claim_b;
    report.full_boundary.insert(report.full_boundary.end(), o.full.begin(), o.full.end());
    report.levels.push_back(std::move(o.result));
  }
  if (report.claim_a && report.claim_b) {
    if (report.full_boundary.empty())
      report.conclusion = "contractible";
    else
      report.conclusion = "(n-1)-connected, n = " + std::to_string(cc.n);
  }
  return report;
}

ordered_json ClaimsReport::to_json() const {
  ordered_json lv = ordered_json::array();
  for (const auto &r : levels) {
    ordered_json j;
    j["level"] = r.level;
    j["chambers"] = r.chambers;
    j["claim_a"] = r.claim_a;
    j["claim_b"] = r.claim_b;
    j["claim_a_witness"] = witness_json(r.a_witness);
    j["claim_b_witness"] = witness_json(r.b_witness);
    lv.push_back(std::move(j));
  }
  ordered_json j;
  j["n"] = n;
  j["claim_a"] = claim_a;
  j["claim_b"] = claim_b;
  j["levels"] = std::move(lv);
  j["full_boundary_chambers"] = full_boundary;
  j["conclusion"] = conclusion ? ordered_json(*conclusion) : ordered_json(nullptr);
  return j;
}

ShellingResult is_shelling(const ChamberComplex &cc, const std::vector<std::size_t> &order) {
  cc.validate();
  std::vector<std::size_t> check = order;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check.size() != cc.chambers.size() || check[i] != i)
      throw ShellingInputError("order must be a permutation of the chambers");

  std::vector<VertexList> ch;
  for (const auto &c : cc.chambers)
    ch.push_back(sorted(c));
  ShellingResult out;
  std::vector<const VertexList *> before;
  for (std::size_t p = 0; p < order.size(); ++p) {
    const std::size_t i = order[p];
    if (p > 0)
      if (auto w = check_attachment(i, ch[i], attach(ch[i], before))) {
        out.ok = false;
        out.position = p;
        out.violation = std::move(w);
        return out;
      }
    before.push_back(&ch[i]);
  }
  return out;
}

ordered_json ShellingResult::to_json() const {
  ordered_json j;
  j["shelling"] = ok;
  j["position"] = position ? ordered_json(*position) : ordered_json(nullptr);
  j["violation"] = witness_json(violation);
  return j;
}

CoxeterChambers coxeter_chamber_complex(const CoxeterGroup &g, std::optional<std::size_t> ball) {
  if (!ball && !g.is_finite())
    throw NotFiniteTypeError("shelling", "an infinite group needs a ball radius");
  const auto &d = g.diagram();
  if (d.rank() == 0)
    throw ShellingInputError("the empty diagram has no chambers");
  CoxeterChambers out;
  out.elements = g.enumerate(ball).flatten();
  out.complex.n = d.rank() - 1;
  std::map<std::pair<Word, Gen>, std::size_t> vertex_ids;
  for (const auto &w : out.elements) {
    VertexList chamber;
    for (Gen s = 0; s < d.rank(); ++s) {
      // Vertex of type s is the coset w W_{S - s}.
      Word rep = g.t_minimal_representative(w, d.all() & ~bit(s)).word;
      auto [it, fresh] = vertex_ids.try_emplace({std::move(rep), s}, vertex_ids.size());
      chamber.push_back(it->second);
    }
    out.complex.chambers.push_back(sorted(std::move(chamber)));
    out.index.values.push_back(w.length());
  }
  return out;
}

ChamberComplex parse_chamber_complex(const nlohmann::json &j) {
  try {
    ChamberComplex cc;
    cc.n = j.at("n").get<std::size_t>();
    cc.chambers = j.at("chambers").get<std::vector<VertexList>>();
    cc.validate();
    return cc;
  } catch (const nlohmann::json::exception &e) {
    throw ShellingInputError(std::string("malformed chamber complex: ") + e.what());
  }
}

} // namespace artin
