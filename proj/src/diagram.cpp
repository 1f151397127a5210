#include "artin/diagram.hpp"
#include "artin/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace artin {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

std::vector<Gen> members(VertexSet mask) {
  std::vector<Gen> out;
  for (Gen g = 0; g < kMaxRank; ++g)
    if (contains(mask, g))
      out.push_back(g);
  return out;
}

std::string default_name(std::size_t i, std::size_t rank) {
  static const char *letters[] = {"s", "t", "u", "v", "w", "x", "y", "z"};
  if (rank <= 8)
    return letters[i];
  return "s" + std::to_string(i + 1);
}

std::vector<std::string> default_names(std::size_t rank) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rank; ++i)
    out.push_back(default_name(i, rank));
  return out;
}

CoxeterDiagram path_diagram(int rank, const std::vector<int> &labels) {
  auto names = default_names(static_cast<std::size_t>(rank));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < rank; ++i)
    edges.push_back({names[i], names[i + 1], labels[i]});
  return CoxeterDiagram(names, edges);
}

/// Walks a path from `start` inside `comp`, returning vertices in order.
std::vector<Gen> walk_path(const CoxeterDiagram &d, VertexSet comp, Gen start, Gen avoid,
                           bool has_avoid) {
  std::vector<Gen> out{start};
  Gen prev = start;
  bool have_prev = false;
  Gen cur = start;
  for (;;) {
    std::optional<Gen> next;
    for (Gen g : members(comp)) {
      if (g == cur || (have_prev && g == prev) || (has_avoid && g == avoid))
        continue;
      if (d.label(cur, g) != 2) {
        next = g;
        break;
      }
    }
    if (!next)
      break;
    prev = cur;
    have_prev = true;
    cur = *next;
    out.push_back(cur);
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    return std::nullopt;
  return v;
}

} // namespace

// ---------------------------------------------------------------------------
// CoxeterDiagram

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> vertices, const std::vector<Edge> &edges)
    : names_(std::move(vertices)) {
  const std::size_t n = names_.size();
  if (n > kMaxRank)
    throw DiagramError("rank " + std::to_string(n) + " exceeds the supported maximum " +
                       std::to_string(kMaxRank));
  std::set<std::string> seen;
  for (const auto &v : names_) {
    if (v.empty())
      throw DiagramError("vertex names must be nonempty");
    if (v.find_first_of(" \t\n^") != std::string::npos)
      throw DiagramError("vertex name '" + v + "' contains whitespace or '^'");
    if (!seen.insert(v).second)
      throw DiagramError("duplicate vertex '" + v + "'");
  }
  labels_.assign(n * n, 2);
  for (std::size_t i = 0; i < n; ++i)
    labels_[i * n + i] = 1;
  for (const auto &e : edges) {
    auto a = index_of(e.a), b = index_of(e.b);
    if (!a || !b)
      throw DiagramError("edge references unknown vertex '" + (a ? e.b : e.a) + "'");
    if (*a == *b)
      throw DiagramError("self-loop on vertex '" + e.a + "'");
    if (e.m < 3)
      throw DiagramError("edge label " + std::to_string(e.m) + " between '" + e.a + "' and '" +
                         e.b + "' is below 3; commuting pairs are encoded by edge absence");
    int &ab = labels_[*a * n + *b];
    if (ab != 2)
      throw DiagramError("duplicate edge between '" + e.a + "' and '" + e.b + "'");
    ab = e.m;
    labels_[*b * n + *a] = e.m;
  }
}

VertexSet CoxeterDiagram::all() const {
  return names_.size() == 32 ? ~VertexSet{0} : (VertexSet{1} << names_.size()) - 1;
}

std::optional<Gen> CoxeterDiagram::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return static_cast<Gen>(i);
  return std::nullopt;
}

Gen CoxeterDiagram::require_index(std::string_view name) const {
  if (auto g = index_of(name))
    return *g;
  throw WordError("diagram", "unknown generator '" + std::string(name) + "'");
}

Word CoxeterDiagram::parse_word(std::string_view text) const {
  Word w;
  for (const auto &tok : split_ws(text))
    w.push_back(require_index(tok));
  return w;
}

std::vector<std::string> CoxeterDiagram::word_names(const Word &w) const {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (Gen g : w)
    out.push_back(name(g));
  return out;
}

std::string CoxeterDiagram::format_word(const Word &w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += ' ';
    out += name(w[i]);
  }
  return out.empty() ? "e" : out;
}

std::vector<std::string> CoxeterDiagram::subset_names(VertexSet t) const {
  std::vector<std::string> out;
  for (Gen g = 0; g < rank(); ++g)
    if (contains(t, g))
      out.push_back(name(g));
  return out;
}

VertexSet CoxeterDiagram::parse_subset(std::string_view text) const {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  VertexSet t = 0;
  for (const auto &tok : split_ws(cleaned))
    t |= bit(require_index(tok));
  return t;
}

std::vector<Edge> CoxeterDiagram::edges() const {
  std::vector<Edge> out;
  for (Gen a = 0; a < rank(); ++a)
    for (Gen b = a + 1; b < rank(); ++b)
      if (label(a, b) != 2)
        out.push_back({name(a), name(b), label(a, b)});
  return out;
}

// ---------------------------------------------------------------------------
// Classification

std::string TypeLabel::name() const {
  switch (family) {
  case Family::A:
    return "A(" + std::to_string(rank) + ")";
  case Family::B:
    return "B(" + std::to_string(rank) + ")";
  case Family::D:
    return "D(" + std::to_string(rank) + ")";
  case Family::I2:
    return "I2(" + std::to_string(p) + ")";
  case Family::F4:
    return "F4";
  case Family::H3:
    return "H3";
  case Family::H4:
    return "H4";
  case Family::E6:
    return "E6";
  case Family::E7:
    return "E7";
  case Family::E8:
    return "E8";
  }
  return "?";
}

CoxeterDiagram family_diagram(Family family, int rank, int p) {
  switch (family) {
  case Family::A:
    if (rank < 1)
      throw DiagramError("A(n) requires n >= 1");
    return path_diagram(rank, std::vector<int>(std::max(rank - 1, 0), 3));
  case Family::B: {
    if (rank < 2)
      throw DiagramError("B(n) requires n >= 2");
    std::vector<int> labels(rank - 1, 3);
    labels[0] = 4;
    return path_diagram(rank, labels);
  }
  case Family::D: {
    if (rank < 4)
      throw DiagramError("D(n) requires n >= 4");
    auto names = default_names(rank);
    std::vector<Edge> edges{{names[0], names[2], 3}, {names[1], names[2], 3}};
    for (int i = 2; i + 1 < rank; ++i)
      edges.push_back({names[i], names[i + 1], 3});
    return CoxeterDiagram(names, edges);
  }
  case Family::I2: {
    auto names = default_names(2);
    if (p == 2)
      return CoxeterDiagram(names, {});
    if (p < 2)
      throw DiagramError("I2(p) requires p >= 2");
    return CoxeterDiagram(names, {{names[0], names[1], p}});
  }
  case Family::F4:
    return path_diagram(4, {3, 4, 3});
  case Family::H3:
    return path_diagram(3, {5, 3});
  case Family::H4:
    return path_diagram(4, {5, 3, 3});
  case Family::E6:
  case Family::E7:
  case Family::E8: {
    int n = family == Family::E6 ? 6 : family == Family::E7 ? 7 : 8;
    auto names = default_names(n);
    std::vector<Edge> edges;
    for (int i = 0; i + 2 < n; ++i)
      edges.push_back({names[i], names[i + 1], 3});
    edges.push_back({names[2], names[n - 1], 3});
    return CoxeterDiagram(names, edges);
  }
  }
  throw DiagramError("unknown family");
}

bool verify_witness(const CoxeterDiagram &d, const TypeLabel &label) {
  CoxeterDiagram ref = family_diagram(label.family, label.rank, label.p);
  if (ref.rank() != label.positions.size())
    return false;
  std::set<Gen> used(label.positions.begin(), label.positions.end());
  if (used.size() != label.positions.size())
    return false;
  for (Gen v : label.positions)
    if (v >= d.rank())
      return false;
  for (Gen i = 0; i < ref.rank(); ++i)
    for (Gen j = 0; j < ref.rank(); ++j)
      if (i != j && ref.label(i, j) != d.label(label.positions[i], label.positions[j]))
        return false;
  return true;
}

std::vector<VertexSet> connected_components(const CoxeterDiagram &d, VertexSet mask) {
  std::vector<VertexSet> out;
  VertexSet todo = mask;
  while (todo) {
    Gen start = static_cast<Gen>(__builtin_ctz(todo));
    VertexSet comp = bit(start), frontier = bit(start);
    while (frontier) {
      Gen v = static_cast<Gen>(__builtin_ctz(frontier));
      frontier &= frontier - 1;
      for (Gen u : members(mask & ~comp))
        if (d.label(v, u) != 2) {
          comp |= bit(u);
          frontier |= bit(u);
        }
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

std::optional<TypeLabel> classify_component(const CoxeterDiagram &d, VertexSet comp) {
  auto verts = members(comp);
  const int k = static_cast<int>(verts.size());
  if (k == 0)
    return std::nullopt;
  if (k == 1)
    return TypeLabel{Family::A, 1, 0, {verts[0]}};

  int edge_count = 0;
  std::map<Gen, int> degree;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int m = d.label(verts[i], verts[j]);
      if (m == kInfinity)
        return std::nullopt;
      if (m != 2) {
        ++edge_count;
        ++degree[verts[i]];
        ++degree[verts[j]];
      }
    }
  if (edge_count != k - 1 || connected_components(d, comp).size() != 1)
    return std::nullopt; // not a tree

  if (k == 2) {
    int m = d.label(verts[0], verts[1]);
    if (m == 3)
      return TypeLabel{Family::A, 2, 0, verts};
    if (m == 4)
      return TypeLabel{Family::B, 2, 0, verts};
    return TypeLabel{Family::I2, 2, m, verts};
  }

  int max_degree = 0;
  std::vector<Gen> branch;
  for (auto [v, deg] : degree) {
    max_degree = std::max(max_degree, deg);
    if (deg >= 3)
      branch.push_back(v);
  }

  if (max_degree <= 2) {
    Gen end = verts[0];
    for (Gen v : verts)
      if (degree[v] == 1) {
        end = v;
        break;
      }
    auto path = walk_path(d, comp, end, 0, false);
    std::vector<int> labels;
    for (int i = 0; i + 1 < k; ++i)
      labels.push_back(d.label(path[i], path[i + 1]));
    std::vector<int> odd;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (labels[i] != 3)
        odd.push_back(i);
    if (odd.empty())
      return TypeLabel{Family::A, k, 0, path};
    if (odd.size() != 1)
      return std::nullopt;
    int at = odd[0], m = labels[at];
    bool at_end = at == 0 || at == k - 2;
    if (at_end && at != 0)
      std::reverse(path.begin(), path.end());
    if (m == 4 && at_end)
      return TypeLabel{Family::B, k, 0, path};
    if (m == 4 && k == 4 && at == 1)
      return TypeLabel{Family::F4, 4, 0, path};
    if (m == 5 && at_end && k == 3)
      return TypeLabel{Family::H3, 3, 0, path};
    if (m == 5 && at_end && k == 4)
      return TypeLabel{Family::H4, 4, 0, path};
    return std::nullopt;
  }

  if (branch.size() != 1 || max_degree != 3)
    return std::nullopt;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int m = d.label(verts[i], verts[j]);
      if (m != 2 && m != 3)
        return std::nullopt;
    }
  Gen center = branch[0];
  std::vector<std::vector<Gen>> arms;
  for (Gen v : verts)
    if (v != center && d.label(center, v) != 2)
      arms.push_back(walk_path(d, comp & ~bit(center), v, center, true));
  std::stable_sort(arms.begin(), arms.end(),
                   [](const auto &a, const auto &b) { return a.size() < b.size(); });
  std::size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
  if (a != 1)
    return std::nullopt;
  if (b == 1) {
    std::vector<Gen> pos{arms[0][0], arms[1][0], center};
    pos.insert(pos.end(), arms[2].begin(), arms[2].end());
    return TypeLabel{Family::D, k, 0, pos};
  }
  if (b == 2 && c >= 2 && c <= 4) {
    std::vector<Gen> pos{arms[1][1], arms[1][0], center};
    pos.insert(pos.end(), arms[2].begin(), arms[2].end());
    pos.push_back(arms[0][0]);
    Family f = c == 2 ? Family::E6 : c == 3 ? Family::E7 : Family::E8;
    return TypeLabel{f, k, 0, pos};
  }
  return std::nullopt;
}

FiniteTypeResult is_finite_type(const CoxeterDiagram &d, VertexSet mask) {
  FiniteTypeResult out;
  out.finite = true;
  for (VertexSet comp : connected_components(d, mask)) {
    auto label = classify_component(d, comp);
    out.finite = out.finite && label.has_value();
    out.components.push_back({comp, std::move(label)});
  }
  return out;
}

FiniteTypeResult is_finite_type(const CoxeterDiagram &d) { return is_finite_type(d, d.all()); }

bool is_finite_subset(const CoxeterDiagram &d, VertexSet mask) {
  for (VertexSet comp : connected_components(d, mask))
    if (!classify_component(d, comp))
      return false;
  return true;
}

namespace {

std::vector<std::uint8_t> finite_table_serial(const CoxeterDiagram &d) {
  const std::size_t count = std::size_t{1} << d.rank();
  std::vector<std::uint8_t> table(count, 0);
  for (std::size_t mask = 0; mask < count; ++mask)
    table[mask] = is_finite_subset(d, static_cast<VertexSet>(mask));
  return table;
}

std::vector<std::uint8_t> finite_table_parallel(const CoxeterDiagram &d) {
  const long long count = static_cast<long long>(std::size_t{1} << d.rank());
  std::vector<std::uint8_t> table(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long mask = 0; mask < count; ++mask)
    table[mask] = is_finite_subset(d, static_cast<VertexSet>(mask));
  return table;
}

void check_guard(const CoxeterDiagram &d, std::size_t rank_guard) {
  if (d.rank() > rank_guard || d.rank() >= 31)
    throw CapExceededError("diagram",
                           "subset enumeration over rank " + std::to_string(d.rank()),
                           std::min<std::size_t>(rank_guard, 30));
}

} // namespace

std::vector<VertexSet> finite_type_subsets(const CoxeterDiagram &d, std::size_t rank_guard,
                                           Execution exec) {
  check_guard(d, rank_guard);
  auto table = exec == Execution::serial ? finite_table_serial(d) : finite_table_parallel(d);
  std::vector<VertexSet> out;
  for (std::size_t mask = 0; mask < table.size(); ++mask)
    if (table[mask])
      out.push_back(static_cast<VertexSet>(mask));
  return out;
}

TaxonomyReport classify_taxonomy(const CoxeterDiagram &d, std::size_t rank_guard) {
  check_guard(d, rank_guard);
  const std::size_t n = d.rank();
  const auto sf = finite_type_subsets(d, rank_guard);
  std::vector<std::uint8_t> finite(std::size_t{1} << n, 0);
  for (VertexSet t : sf)
    finite[t] = 1;

  TaxonomyReport r;
  r.finite_type = finite[d.all()];
  r.components = is_finite_type(d).components;

  std::vector<VertexSet> inf_neighbours(n, 0);
  r.free_of_infinity = true;
  r.large_type = true;
  for (Gen s = 0; s < n; ++s)
    for (Gen t = 0; t < n; ++t) {
      if (s == t)
        continue;
      if (d.label(s, t) == kInfinity) {
        inf_neighbours[s] |= bit(t);
        r.free_of_infinity = false;
      }
      if (d.label(s, t) < 3)
        r.large_type = false;
    }

  r.fc_type = true;
  for (std::size_t mask = 0; mask < finite.size() && r.fc_type; ++mask) {
    bool inf_free = true;
    for (Gen s = 0; s < n; ++s)
      if (contains(static_cast<VertexSet>(mask), s) && (inf_neighbours[s] & mask))
        inf_free = false;
    if (inf_free && !finite[mask])
      r.fc_type = false;
  }

  int max_size = 0;
  r.locally_reducible = true;
  for (VertexSet t : sf) {
    max_size = std::max(max_size, popcount(t));
    for (const auto &c : is_finite_type(d, t).components) {
      bool ok = popcount(c.vertices) <= 2 ||
                (c.type && c.type->family == Family::A && c.type->rank == 3);
      r.locally_reducible = r.locally_reducible && ok;
    }
  }
  r.two_dimensional = max_size <= 2;
  r.almost_spherical =
      r.free_of_infinity && !r.finite_type && sf.size() + 1 == (std::size_t{1} << n);
  return r;
}

// ---------------------------------------------------------------------------
// Parsing

CoxeterDiagram parse_diagram_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw DiagramError(std::string("malformed diagram JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw DiagramError("diagram JSON needs a \"vertices\" array");
  std::vector<std::string> names;
  for (const auto &v : j["vertices"]) {
    if (!v.is_string())
      throw DiagramError("vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw DiagramError("\"edges\" must be an array");
    for (const auto &e : j["edges"]) {
      if (!e.is_object() || !e.contains("a") || !e.contains("b") || !e.contains("m") ||
          !e["a"].is_string() || !e["b"].is_string())
        throw DiagramError("each edge needs string \"a\", \"b\" and a label \"m\"");
      Edge edge{e["a"].get<std::string>(), e["b"].get<std::string>(), 0};
      const auto &m = e["m"];
      if (m.is_string()) {
        auto s = m.get<std::string>();
        if (s != "inf" && s != "infinity")
          throw DiagramError("edge label must be an integer >= 3 or \"inf\"");
        edge.m = kInfinity;
      } else if (m.is_number_integer()) {
        auto v = m.get<long long>();
        if (v >= kInfinity)
          throw DiagramError("edge label too large");
        edge.m = static_cast<int>(v);
      } else {
        throw DiagramError("edge label must be an integer >= 3 or \"inf\"");
      }
      edges.push_back(std::move(edge));
    }
  }
  return CoxeterDiagram(std::move(names), edges);
}

std::string diagram_to_json(const CoxeterDiagram &d) {
  nlohmann::ordered_json j;
  j["vertices"] = d.vertices();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto &e : d.edges()) {
    nlohmann::ordered_json je;
    je["a"] = e.a;
    je["b"] = e.b;
    if (e.m == kInfinity)
      je["m"] = "inf";
    else
      je["m"] = e.m;
    j["edges"].push_back(je);
  }
  return j.dump();
}

CoxeterDiagram preset(std::string_view raw) {
  const std::string name = trim(raw);
  auto fail = [&]() -> CoxeterDiagram { throw DiagramError("unknown preset '" + name + "'"); };
  if (name == "Atilde2") {
    auto names = default_names(3);
    return CoxeterDiagram(names, {{names[0], names[1], 3},
                                  {names[1], names[2], 3},
                                  {names[0], names[2], 3}});
  }
  static const std::map<std::string, Family> exceptional{
      {"F4", Family::F4}, {"H3", Family::H3}, {"H4", Family::H4},
      {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8}};
  if (auto it = exceptional.find(name); it != exceptional.end())
    return family_diagram(it->second, 0);

  if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
    std::string arg = name.substr(3, name.size() - 4);
    if (arg == "inf" || arg == "infinity") {
      auto names = default_names(2);
      return CoxeterDiagram(names, {{names[0], names[1], kInfinity}});
    }
    auto p = parse_int(arg);
    if (!p || *p < 2)
      return fail();
    return family_diagram(Family::I2, 2, *p);
  }

  if (name.size() < 2)
    return fail();
  Family f;
  switch (name[0]) {
  case 'A':
    f = Family::A;
    break;
  case 'B':
    f = Family::B;
    break;
  case 'D':
    f = Family::D;
    break;
  default:
    return fail();
  }
  std::string arg = name.substr(1);
  if (arg.rfind("n(", 0) == 0 && arg.back() == ')')
    arg = arg.substr(2, arg.size() - 3);
  else if (arg.front() == '(' && arg.back() == ')')
    arg = arg.substr(1, arg.size() - 2);
  auto k = parse_int(arg);
  if (!k || *k < 1 || *k > static_cast<int>(kMaxRank))
    return fail();
  try {
    return family_diagram(f, *k);
  } catch (const DiagramError &) {
    return fail();
  }
}

std::vector<std::string> preset_names() {
  return {"An(k)", "Bn(k)", "Dn(k)", "I2(p)", "I2(inf)", "F4", "H3",
          "H4",    "E6",    "E7",    "E8",    "Atilde2"};
}

CoxeterDiagram parse_diagram(std::string_view source) {
  std::string s = trim(source);
  if (!s.empty() && s.front() == '{')
    return parse_diagram_json(s);
  return preset(s);
}

} // namespace artin
