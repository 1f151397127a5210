#pragma once

#include "artin/artin_group.hpp"
#include "artin/homology.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace artin {

/// A finite poset with a dense relation matrix; elements carry opaque labels.
class Poset {
public:
  Poset() = default;
  Poset(std::vector<std::string> labels, std::vector<std::uint8_t> leq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  bool is_partial_order() const;
  /// Covering pairs (i, j) with i < j and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  std::string kind;                ///< "salvetti", "davis", "deligne-fd", ...
  std::optional<std::size_t> ball; ///< length bound when the group was truncated

  std::string to_dot() const;
  nlohmann::ordered_json to_json() const;

private:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
};

using Simplex = std::vector<std::size_t>; ///< sorted vertex ids

class SimplicialComplex {
public:
  SimplicialComplex() = default;
  /// Keeps only inclusion-maximal simplices.
  SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> simplices);

  std::size_t vertex_count() const { return vertices_; }
  const std::vector<Simplex> &facets() const { return facets_; }
  int dimension() const; ///< -1 when empty

  /// All nonempty faces of dimension k, sorted.
  std::vector<Simplex> faces(int k) const;
  std::vector<std::size_t> f_vector() const;
  long long euler_characteristic() const;

  nlohmann::ordered_json to_json() const;

private:
  std::size_t vertices_ = 0;
  std::vector<Simplex> facets_;
};

struct HomologyResult {
  std::vector<HomologyGroup> groups; ///< index = dimension
  long long euler_characteristic() const;
  std::vector<std::size_t> betti() const;
  std::string to_string() const; ///< "H_0 = Z, H_1 = Z^3 + Z/2"
  nlohmann::ordered_json to_json() const;
};

/// Pairs (v, u) of a group list, giving support and right descents of v^-1 u.
/// Shared by the Salvetti and Davis relation kernels.
struct QuotientTable {
  std::size_t n = 0;
  std::vector<VertexSet> support;
  std::vector<VertexSet> descents;
};

QuotientTable quotient_table(const CoxeterGroup &g, const std::vector<CoxeterElement> &elems,
                             Execution exec = Execution::parallel);

/// W x S^f with (u,T) <= (v,R) iff T in R, v^-1 u in W_R and v^-1 u is T-minimal.
/// Without a ball the diagram must be finite type.
Poset salvetti_poset(const CoxeterGroup &g, std::optional<std::size_t> ball,
                     Execution exec = Execution::parallel);

/// Cosets wW_T, T in S^f, named by their T-minimal representative, ordered by inclusion.
/// With a ball, cosets whose minimal representative has length <= ball.
Poset davis_poset(const CoxeterGroup &g, std::optional<std::size_t> ball,
                  Execution exec = Execution::parallel);

/// S^f ordered by inclusion.
Poset deligne_fundamental_domain(const CoxeterDiagram &d);

SimplicialComplex order_complex(const Poset &p);

/// Unreduced integer homology in dimensions 0..dim.
HomologyResult homology(const SimplicialComplex &c, std::size_t max_cells = 2'000'000);

struct QuotientCells {
  std::vector<std::size_t> f_vector; ///< trailing zeros trimmed
  long long euler_characteristic = 0;
};

QuotientCells salvetti_quotient_cells(const CoxeterDiagram &d);

/// H_1 of the Artin group: odd labels identify generators, everything else is vacuous.
AbelianGroup abelianization(const CoxeterDiagram &d);

} // namespace artin
