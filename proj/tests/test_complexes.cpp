#include "artin/complexes.hpp"
#include "artin/error.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace artin;

namespace {

// Rank over Z/2 of the boundary map C_k -> C_{k-1}, by plain Gaussian elimination.
std::size_t rank_mod2(const SimplicialComplex &c, int k) {
  if (k <= 0)
    return 0;
  auto rows = c.faces(k - 1);
  auto cols = c.faces(k);
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < rows.size(); ++i)
    index[rows[i]] = i;
  std::vector<std::vector<std::uint8_t>> m(cols.size(), std::vector<std::uint8_t>(rows.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      Simplex f = cols[j];
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      m[j][index.at(f)] ^= 1;
    }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < rows.size() && rank < m.size(); ++col) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][col])
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[rank], m[p]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][col])
        for (std::size_t x = 0; x < rows.size(); ++x)
          m[r][x] ^= m[rank][x];
    ++rank;
  }
  return rank;
}

// Six-vertex projective plane: the antipodal quotient of the icosahedron.
SimplicialComplex projective_plane() {
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

std::vector<std::size_t> salvetti_betti(const std::string &name) {
  CoxeterGroup g(preset(name));
  return homology(order_complex(salvetti_poset(g, std::nullopt))).betti();
}

} // namespace

TEST_CASE("Smith normal form") {
  DenseMatrix a = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto r = smith_normal_form(a);
  CHECK(r.rank == 3);
  CHECK(r.invariant_factors == std::vector<BigInt>{2, 6, 12});
  CHECK(smith_normal_form(DenseMatrix{}).rank == 0);
  CHECK(smith_normal_form(DenseMatrix{{0, 0}, {0, 0}}).rank == 0);

  std::mt19937 rng(41);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 6, cols = 1 + (trial / 6) % 6;
    DenseMatrix d(rows, std::vector<BigInt>(cols));
    SparseMatrix s(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        int v = trial % 3 == 0 ? entry(rng) : (entry(rng) % 2);
        d[i][j] = v;
        s.add(i, j, v);
      }
    auto dense = smith_normal_form(d);
    auto sparse = smith_normal_form(s);
    CHECK(dense.invariant_factors == sparse.invariant_factors);
    for (std::size_t k = 1; k < dense.invariant_factors.size(); ++k)
      CHECK(dense.invariant_factors[k] % dense.invariant_factors[k - 1] == 0);
  }
}

TEST_CASE("order complexes of small posets") {
  Poset chain({"a", "b", "c"}, {1, 1, 1, 0, 1, 1, 0, 0, 1});
  auto c = order_complex(chain);
  CHECK(c.facets() == std::vector<Simplex>{{0, 1, 2}});
  Poset anti({"a", "b"}, {1, 0, 0, 1});
  CHECK(order_complex(anti).facets() == std::vector<Simplex>{{0}, {1}});
  CHECK(homology(order_complex(anti)).betti() == std::vector<std::size_t>{2});
  CHECK_FALSE(Poset({"a", "b"}, {1, 1, 1, 1}).is_partial_order());
}

TEST_CASE("homology of standard spaces") {
  SimplicialComplex circle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(homology(circle).to_string() == "H_0 = Z, H_1 = Z");
  SimplicialComplex triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(homology(triangle).to_string() == "H_0 = Z, H_1 = Z");
  SimplicialComplex sphere(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(homology(sphere).to_string() == "H_0 = Z, H_1 = 0, H_2 = Z");

  auto rp2 = projective_plane();
  auto h = homology(rp2);
  CHECK(h.to_string() == "H_0 = Z, H_1 = Z/2, H_2 = 0");
  // Universal coefficients against an independent mod 2 computation.
  const auto f = rp2.f_vector();
  std::vector<std::size_t> mod2;
  for (int k = 0; k <= 2; ++k)
    mod2.push_back(f[k] - rank_mod2(rp2, k) - rank_mod2(rp2, k + 1));
  CHECK(mod2 == std::vector<std::size_t>{1, 1, 1});
  CHECK(rp2.euler_characteristic() == 1);
  CHECK(h.euler_characteristic() == 1);
}

TEST_CASE("Salvetti posets") {
  CoxeterGroup a1(preset("A1"));
  auto p = salvetti_poset(a1, std::nullopt);
  REQUIRE(p.size() == 4);
  CHECK(p.is_partial_order());
  auto oc = order_complex(p);
  CHECK(oc.f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(homology(oc).to_string() == "H_0 = Z, H_1 = Z");

  CHECK(salvetti_poset(CoxeterGroup(preset("A2")), std::nullopt).size() == 24);
  CHECK(salvetti_poset(CoxeterGroup(preset("I2(4)")), std::nullopt).size() == 32);
  for (std::string name : {"A2", "B2", "I2(5)", "A1"})
    CHECK(salvetti_poset(CoxeterGroup(preset(name)), std::nullopt).is_partial_order());
  auto truncated = salvetti_poset(CoxeterGroup(preset("Atilde2")), std::size_t{2});
  CHECK(truncated.ball == std::size_t{2});
  CHECK(truncated.is_partial_order());
  CHECK_THROWS_AS(salvetti_poset(CoxeterGroup(preset("Atilde2")), std::nullopt),
                  NotFiniteTypeError);
}

TEST_CASE("Salvetti homology follows the arrangement Poincare polynomial") {
  // prod (1 + e_i t) over the exponents e_i of W.
  CHECK(salvetti_betti("A2") == std::vector<std::size_t>{1, 3, 2});
  CHECK(salvetti_betti("B2") == std::vector<std::size_t>{1, 4, 3});
  CHECK(salvetti_betti("I2(5)") == std::vector<std::size_t>{1, 5, 4});
  CHECK(salvetti_betti("A3") == std::vector<std::size_t>{1, 6, 11, 6});
  for (std::string name : {"I2(3)", "I2(4)", "I2(6)"}) {
    CoxeterGroup g(preset(name));
    CHECK(salvetti_betti(name)[1] == g.reflections(std::nullopt).size());
  }
}

TEST_CASE("Davis posets are contractible") {
  CoxeterGroup a1(preset("A1"));
  CHECK(davis_poset(a1, std::nullopt).size() == 3);
  // 6 + 3 + 3 + 1 cosets of the four parabolics.
  CHECK(davis_poset(CoxeterGroup(preset("A2")), std::nullopt).size() == 13);
  for (std::string name : {"A2", "B2", "A3"}) {
    CAPTURE(name);
    auto p = davis_poset(CoxeterGroup(preset(name)), std::nullopt);
    CHECK(p.is_partial_order());
    auto h = homology(order_complex(p));
    CHECK(h.betti()[0] == 1);
    for (std::size_t k = 1; k < h.groups.size(); ++k)
      CHECK(h.groups[k].betti == 0);
    for (const auto &g : h.groups)
      CHECK(g.torsion.empty());
  }
  auto ball = davis_poset(CoxeterGroup(preset("Atilde2")), std::size_t{2});
  CHECK(ball.ball == std::size_t{2});
  CHECK(ball.is_partial_order());
}

TEST_CASE("Deligne fundamental domains") {
  CHECK(deligne_fundamental_domain(preset("Atilde2")).size() == 7);
  CHECK(deligne_fundamental_domain(preset("B3")).size() == 8);
  auto a1 = deligne_fundamental_domain(preset("A1"));
  CHECK(order_complex(a1).facets() == std::vector<Simplex>{{0, 1}});
  for (std::string name : {"Atilde2", "B3", "I2(inf)", "A4"}) {
    auto h = homology(order_complex(deligne_fundamental_domain(preset(name))));
    CHECK(h.betti()[0] == 1);
    CHECK(h.euler_characteristic() == 1);
    for (std::size_t k = 1; k < h.groups.size(); ++k)
      CHECK(h.groups[k].to_string() == "0");
  }
}

TEST_CASE("Euler characteristic by chains and by Betti numbers") {
  for (std::string name : {"A2", "B2", "A3", "I2(5)"}) {
    CoxeterGroup g(preset(name));
    for (const auto &p : {salvetti_poset(g, std::nullopt), davis_poset(g, std::nullopt)}) {
      auto c = order_complex(p);
      CHECK(c.euler_characteristic() == homology(c).euler_characteristic());
    }
  }
}

TEST_CASE("quotient cell counts") {
  auto a2 = salvetti_quotient_cells(preset("A2"));
  CHECK(a2.f_vector == std::vector<std::size_t>{1, 2, 1});
  auto at = salvetti_quotient_cells(preset("Atilde2"));
  CHECK(at.f_vector == std::vector<std::size_t>{1, 3, 3});
  CHECK(at.euler_characteristic == 1);
  auto free_pair = salvetti_quotient_cells(preset("I2(inf)"));
  CHECK(free_pair.f_vector == std::vector<std::size_t>{1, 2});
  CHECK(free_pair.euler_characteristic == -1);
}

TEST_CASE("abelianization counts odd-label components") {
  CHECK(abelianization(preset("A5")).to_string() == "Z");
  CHECK(abelianization(preset("I2(4)")).to_string() == "Z^2");
  CHECK(abelianization(preset("I2(7)")).to_string() == "Z");
  CHECK(abelianization(preset("B3")).to_string() == "Z^2");
  CHECK(abelianization(preset("I2(inf)")).to_string() == "Z^2");
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    auto d = test_support::random_diagram(rng, 1 + trial % 7, {2, 3, 4, 5, 6, kInfinity});
    auto a = abelianization(d);
    CHECK(a.betti == test_support::odd_label_components(d));
    CHECK(a.torsion.empty());
  }
}

TEST_CASE("relation kernels agree across execution modes") {
  for (std::string name : {"B2", "A3"}) {
    CoxeterGroup g(preset(name));
    auto s = salvetti_poset(g, std::nullopt, Execution::serial);
    auto p = salvetti_poset(g, std::nullopt, Execution::parallel);
    CHECK(s.labels() == p.labels());
    CHECK(s.covers() == p.covers());
    auto ds = davis_poset(g, std::nullopt, Execution::serial);
    auto dp = davis_poset(g, std::nullopt, Execution::parallel);
    CHECK(ds.covers() == dp.covers());
  }
}

TEST_CASE("exports") {
  auto p = salvetti_poset(CoxeterGroup(preset("A1")), std::nullopt);
  const auto dot = p.to_dot();
  CHECK(dot.find("digraph hasse") == 0);
  CHECK(dot.find("\"(s, {s})\"") != std::string::npos);
  auto j = p.to_json();
  CHECK(j["size"] == 4);
  CHECK(j["covers"].size() == 4);
  auto h = homology(projective_plane()).to_json();
  CHECK(h["homology"][1]["torsion"][0] == 2);
  CHECK(order_complex(p).to_json()["f_vector"] == nlohmann::json({4, 4}));
}
