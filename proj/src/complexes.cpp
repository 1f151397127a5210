#include "artin/complexes.hpp"
#include "artin/error.hpp"
#include "artin/kernels.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace artin {

using nlohmann::ordered_json;

Poset::Poset(std::vector<std::string> labels, std::vector<std::uint8_t> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  if (leq_.size() != labels_.size() * labels_.size())
    throw Error("complexes", "relation matrix does not match the element count");
}

bool Poset::is_partial_order() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq(i, i))
      return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        return false;
      if (!leq(i, j))
        continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq(j, k) && !leq(i, k))
          return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> ups;
    for (std::size_t j = 0; j < n; ++j)
      if (less(i, j))
        ups.push_back(j);
    for (std::size_t j : ups) {
      bool direct = std::none_of(ups.begin(), ups.end(),
                                 [&](std::size_t k) { return less(k, j); });
      if (direct)
        out.emplace_back(i, j);
    }
  }
  return out;
}

std::string Poset::to_dot() const {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < size(); ++i)
    out += "  " + std::to_string(i) + " [label=\"" + labels_[i] + "\"];\n";
  for (auto [i, j] : covers())
    out += "  " + std::to_string(i) + " -> " + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

ordered_json Poset::to_json() const {
  ordered_json j;
  j["kind"] = kind;
  j["ball"] = ball ? ordered_json(*ball) : ordered_json(nullptr);
  j["size"] = size();
  j["elements"] = labels_;
  ordered_json cov = ordered_json::array();
  for (auto [a, b] : covers())
    cov.push_back({a, b});
  j["covers"] = std::move(cov);
  return j;
}

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> simplices)
    : vertices_(vertex_count) {
  for (auto &s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t v : s)
      if (v >= vertex_count)
        throw Error("complexes", "simplex vertex out of range");
  }
  std::sort(simplices.begin(), simplices.end(), [](const Simplex &a, const Simplex &b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  for (auto &s : simplices) {
    if (s.empty())
      continue;
    bool contained = std::any_of(facets_.begin(), facets_.end(), [&](const Simplex &f) {
      return f.size() > s.size() && std::includes(f.begin(), f.end(), s.begin(), s.end());
    });
    if (!contained)
      facets_.push_back(std::move(s));
  }
  std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto &f : facets_)
    d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

namespace {

std::vector<std::set<Simplex>> all_faces(const std::vector<Simplex> &facets, int dim) {
  std::vector<std::set<Simplex>> out(dim + 1);
  for (const auto &f : facets) {
    const std::size_t q = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < q; ++i)
        if (mask >> i & 1)
          s.push_back(f[i]);
      out[s.size() - 1].insert(std::move(s));
    }
  }
  return out;
}

} // namespace

std::vector<Simplex> SimplicialComplex::faces(int k) const {
  const int d = dimension();
  if (k < 0 || k > d)
    return {};
  auto all = all_faces(facets_, d);
  return {all[k].begin(), all[k].end()};
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto &level : all_faces(facets_, dimension()))
    out.push_back(level.size());
  return out;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  auto f = f_vector();
  for (std::size_t k = 0; k < f.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(f[k]);
  return chi;
}

ordered_json SimplicialComplex::to_json() const {
  ordered_json j;
  j["vertices"] = vertices_;
  j["dimension"] = dimension();
  j["facets"] = facets_;
  j["f_vector"] = f_vector();
  j["euler_characteristic"] = euler_characteristic();
  return j;
}

long long HomologyResult::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < groups.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[k].betti);
  return chi;
}

std::vector<std::size_t> HomologyResult::betti() const {
  std::vector<std::size_t> out;
  for (const auto &g : groups)
    out.push_back(g.betti);
  return out;
}

std::string HomologyResult::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (k)
      out += ", ";
    out += "H_" + std::to_string(k) + " = " + groups[k].to_string();
  }
  return out;
}

namespace {

ordered_json bigint_json(const BigInt &v) {
  if (v <= BigInt(std::numeric_limits<long long>::max()))
    return v.convert_to<long long>();
  return v.str();
}

} // namespace

ordered_json HomologyResult::to_json() const {
  ordered_json dims = ordered_json::array();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    ordered_json torsion = ordered_json::array();
    for (const auto &t : groups[k].torsion)
      torsion.push_back(bigint_json(t));
    dims.push_back({{"dim", k}, {"betti", groups[k].betti}, {"torsion", torsion}});
  }
  ordered_json j;
  j["homology"] = std::move(dims);
  j["euler_characteristic"] = euler_characteristic();
  j["text"] = to_string();
  return j;
}

HomologyResult homology(const SimplicialComplex &c, std::size_t max_cells) {
  HomologyResult out;
  const int d = c.dimension();
  if (d < 0)
    return out;
  auto faces = all_faces(c.facets(), d);
  std::size_t total = 0;
  for (const auto &level : faces)
    total += level.size();
  if (total > max_cells)
    throw CapExceededError("complexes", "complex has " + std::to_string(total) + " faces",
                           max_cells);

  std::vector<std::map<Simplex, std::size_t>> index(d + 1);
  for (int k = 0; k <= d; ++k) {
    std::size_t i = 0;
    for (const auto &s : faces[k])
      index[k][s] = i++;
  }
  // boundary[k] : C_k -> C_{k-1}, rows are (k-1)-faces.
  std::vector<SmithResult> boundary(d + 2);
  for (int k = 1; k <= d; ++k) {
    SparseMatrix m(faces[k - 1].size(), faces[k].size());
    std::size_t col = 0;
    for (const auto &s : faces[k]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        m.add(index[k - 1].at(face), col, i % 2 == 0 ? 1 : -1);
      }
      ++col;
    }
    boundary[k] = smith_normal_form(std::move(m));
  }
  for (int k = 0; k <= d; ++k) {
    HomologyGroup h;
    h.betti = faces[k].size() - boundary[k].rank - boundary[k + 1].rank;
    h.torsion = boundary[k + 1].torsion();
    out.groups.push_back(std::move(h));
  }
  return out;
}

QuotientTable quotient_table(const CoxeterGroup &g, const std::vector<CoxeterElement> &elems,
                             Execution exec) {
  QuotientTable out;
  out.n = elems.size();
  std::vector<Word> inverses;
  for (const auto &e : elems)
    inverses.emplace_back(e.word.rbegin(), e.word.rend());
  using Row = std::vector<std::pair<VertexSet, VertexSet>>;
  auto rows = tabulate<Row>(
      out.n,
      [&](std::size_t v) {
        Row row(out.n);
        for (std::size_t u = 0; u < out.n; ++u) {
          CoxeterElement x = g.normalize(concat(inverses[v], elems[u].word));
          row[u] = {support(x.word), g.right_descents(x)};
        }
        return row;
      },
      exec);
  out.support.reserve(out.n * out.n);
  out.descents.reserve(out.n * out.n);
  for (const auto &row : rows)
    for (auto [s, d] : row) {
      out.support.push_back(s);
      out.descents.push_back(d);
    }
  return out;
}

namespace {

std::vector<CoxeterElement> group_elements(const CoxeterGroup &g,
                                           std::optional<std::size_t> ball) {
  if (!ball && !g.is_finite())
    throw NotFiniteTypeError("complexes",
                             "an infinite-type diagram needs a ball radius (--ball)");
  return g.enumerate(ball).flatten();
}

std::string set_label(const CoxeterDiagram &d, VertexSet t) {
  std::string out = "{";
  auto names = d.subset_names(t);
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? "," : "") + names[i];
  return out + "}";
}

std::vector<std::uint8_t> flatten_rows(const std::vector<std::vector<std::uint8_t>> &rows) {
  std::vector<std::uint8_t> out;
  for (const auto &r : rows)
    out.insert(out.end(), r.begin(), r.end());
  return out;
}

} // namespace

Poset salvetti_poset(const CoxeterGroup &g, std::optional<std::size_t> ball, Execution exec) {
  const auto &d = g.diagram();
  const auto sf = finite_type_subsets(d, kDefaultRankGuard, exec);
  const auto elems = group_elements(g, ball);
  const auto table = quotient_table(g, elems, exec);
  const std::size_t m = sf.size();
  const std::size_t n = elems.size() * m;

  std::vector<std::string> labels;
  for (const auto &u : elems)
    for (VertexSet t : sf)
      labels.push_back("(" + d.format_word(u.word) + ", " + set_label(d, t) + ")");

  auto rows = tabulate<std::vector<std::uint8_t>>(
      n,
      [&](std::size_t a) {
        const std::size_t u = a / m;
        const VertexSet t = sf[a % m];
        std::vector<std::uint8_t> row(n, 0);
        for (std::size_t b = 0; b < n; ++b) {
          const std::size_t v = b / m;
          const VertexSet r = sf[b % m];
          const std::size_t x = v * table.n + u; // v^-1 u
          row[b] = is_subset(t, r) && is_subset(table.support[x], r) &&
                   (table.descents[x] & t) == 0;
        }
        return row;
      },
      exec);
  Poset p(std::move(labels), flatten_rows(rows));
  p.kind = "salvetti";
  p.ball = ball;
  return p;
}

Poset davis_poset(const CoxeterGroup &g, std::optional<std::size_t> ball, Execution exec) {
  const auto &d = g.diagram();
  const auto sf = finite_type_subsets(d, kDefaultRankGuard, exec);
  const auto elems = group_elements(g, ball);
  const auto table = quotient_table(g, elems, exec);

  // The identity comes first, so row 0 holds the descents of each element.
  struct Coset {
    std::size_t rep;
    VertexSet t;
  };
  std::vector<Coset> cosets;
  std::vector<std::string> labels;
  for (VertexSet t : sf)
    for (std::size_t w = 0; w < elems.size(); ++w)
      if ((table.descents[w] & t) == 0) {
        cosets.push_back({w, t});
        labels.push_back(d.format_word(elems[w].word) + " W" + set_label(d, t));
      }
  const std::size_t n = cosets.size();
  auto rows = tabulate<std::vector<std::uint8_t>>(
      n,
      [&](std::size_t a) {
        std::vector<std::uint8_t> row(n, 0);
        for (std::size_t b = 0; b < n; ++b) {
          const std::size_t x = cosets[b].rep * table.n + cosets[a].rep;
          row[b] = is_subset(cosets[a].t, cosets[b].t) && is_subset(table.support[x], cosets[b].t);
        }
        return row;
      },
      exec);
  Poset p(std::move(labels), flatten_rows(rows));
  p.kind = "davis";
  p.ball = ball;
  return p;
}

Poset deligne_fundamental_domain(const CoxeterDiagram &d) {
  const auto sf = finite_type_subsets(d);
  std::vector<std::string> labels;
  for (VertexSet t : sf)
    labels.push_back("A" + set_label(d, t));
  std::vector<std::uint8_t> leq;
  for (VertexSet a : sf)
    for (VertexSet b : sf)
      leq.push_back(is_subset(a, b));
  Poset p(std::move(labels), std::move(leq));
  p.kind = "deligne-fd";
  return p;
}

SimplicialComplex order_complex(const Poset &p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> up(n);
  std::vector<bool> has_lower(n, false);
  for (auto [i, j] : p.covers()) {
    up[i].push_back(j);
    has_lower[j] = true;
  }
  std::vector<Simplex> chains;
  Simplex chain;
  auto walk = [&](auto &&self, std::size_t i) -> void {
    chain.push_back(i);
    if (up[i].empty())
      chains.push_back(chain);
    for (std::size_t j : up[i])
      self(self, j);
    chain.pop_back();
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!has_lower[i])
      walk(walk, i);
  return SimplicialComplex(n, std::move(chains));
}

QuotientCells salvetti_quotient_cells(const CoxeterDiagram &d) {
  QuotientCells out;
  out.f_vector.assign(d.rank() + 1, 0);
  for (VertexSet t : finite_type_subsets(d))
    ++out.f_vector[popcount(t)];
  while (!out.f_vector.empty() && out.f_vector.back() == 0)
    out.f_vector.pop_back();
  for (std::size_t k = 0; k < out.f_vector.size(); ++k)
    out.euler_characteristic +=
        (k % 2 == 0 ? 1 : -1) * static_cast<long long>(out.f_vector[k]);
  return out;
}

AbelianGroup abelianization(const CoxeterDiagram &d) {
  const std::size_t n = d.rank();
  DenseMatrix rel;
  for (Gen s = 0; s < n; ++s)
    for (Gen t = s + 1; t < n; ++t) {
      const int m = d.label(s, t);
      if (m == kInfinity || m % 2 == 0)
        continue;
      // s t s ... = t s t ... with m odd abelianizes to s = t.
      std::vector<BigInt> row(n);
      row[s] = 1;
      row[t] = -1;
      rel.push_back(std::move(row));
    }
  SmithResult snf = smith_normal_form(std::move(rel));
  AbelianGroup out;
  out.betti = n - snf.rank;
  out.torsion = snf.torsion();
  return out;
}

} // namespace artin
