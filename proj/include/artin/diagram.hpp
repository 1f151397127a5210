#pragma once

#include "artin/execution.hpp"
#include "artin/word.hpp"

#include <climits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

/// Label of a pair with no braid relation. Compares greater than every finite label.
inline constexpr int kInfinity = INT_MAX;

inline constexpr std::size_t kDefaultRankGuard = 20;

struct Edge {
  std::string a;
  std::string b;
  int m = 3;
};

/// A labelled simplicial graph. Pairs without an edge carry the label 2.
class CoxeterDiagram {
public:
  CoxeterDiagram() = default;
  CoxeterDiagram(std::vector<std::string> vertices, const std::vector<Edge> &edges);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string> &vertices() const { return names_; }
  const std::string &name(Gen g) const { return names_.at(g); }
  VertexSet all() const;

  /// m_st; 1 on the diagonal, 2 for absent edges, kInfinity for free pairs.
  int label(Gen s, Gen t) const { return labels_[s * names_.size() + t]; }

  std::optional<Gen> index_of(std::string_view name) const;
  Gen require_index(std::string_view name) const;

  /// Whitespace-separated generator names.
  Word parse_word(std::string_view text) const;
  std::vector<std::string> word_names(const Word &w) const;
  std::string format_word(const Word &w) const;
  std::vector<std::string> subset_names(VertexSet t) const;
  VertexSet parse_subset(std::string_view text) const;

  /// Edges with label >= 3 (or infinite), in vertex order.
  std::vector<Edge> edges() const;

  bool operator==(const CoxeterDiagram &other) const = default;

private:
  std::vector<std::string> names_;
  std::vector<int> labels_;
};

enum class Family { A, B, D, I2, F4, H3, H4, E6, E7, E8 };

/// A classified spherical component.
/// `positions[i]` is the vertex of the ambient diagram placed at position i of
/// the reference graph `family_diagram(family, rank, p)`.
struct TypeLabel {
  Family family = Family::A;
  int rank = 1;
  int p = 0; ///< dihedral label, only for I2
  std::vector<Gen> positions;

  std::string name() const;
};

/// Reference graph of a classification family, vertices numbered by position.
CoxeterDiagram family_diagram(Family family, int rank, int p = 0);

/// True when `label.positions` is a label-preserving isomorphism from the
/// reference graph onto the induced subdiagram of `d`.
bool verify_witness(const CoxeterDiagram &d, const TypeLabel &label);

std::vector<VertexSet> connected_components(const CoxeterDiagram &d, VertexSet mask);

/// Classification of the induced subdiagram on a connected vertex set.
std::optional<TypeLabel> classify_component(const CoxeterDiagram &d, VertexSet component);

struct ComponentReport {
  VertexSet vertices = 0;
  std::optional<TypeLabel> type; ///< empty for a non-spherical component
};

struct FiniteTypeResult {
  bool finite = false;
  std::vector<ComponentReport> components;
};

FiniteTypeResult is_finite_type(const CoxeterDiagram &d);
FiniteTypeResult is_finite_type(const CoxeterDiagram &d, VertexSet mask);
bool is_finite_subset(const CoxeterDiagram &d, VertexSet mask);

/// All T with W_T finite, ascending by bitmask. Throws past the rank guard.
std::vector<VertexSet> finite_type_subsets(const CoxeterDiagram &d,
                                           std::size_t rank_guard = kDefaultRankGuard,
                                           Execution exec = Execution::parallel);

struct TaxonomyReport {
  bool finite_type = false;
  bool fc_type = false;
  bool two_dimensional = false;
  bool large_type = false;
  bool locally_reducible = false;
  bool free_of_infinity = false;
  bool almost_spherical = false;
  std::vector<ComponentReport> components;
};

TaxonomyReport classify_taxonomy(const CoxeterDiagram &d,
                                 std::size_t rank_guard = kDefaultRankGuard);

/// {"vertices": [...], "edges": [{"a":..,"b":..,"m": int | "inf"}]}
CoxeterDiagram parse_diagram_json(std::string_view text);
std::string diagram_to_json(const CoxeterDiagram &d);

/// Presets: A3 / An(3), B3 / Bn(3), D4 / Dn(4), I2(5), I2(inf), F4, H3, H4,
/// E6, E7, E8, Atilde2.
CoxeterDiagram preset(std::string_view name);
std::vector<std::string> preset_names();

/// A preset name, or JSON text when the source starts with '{'.
CoxeterDiagram parse_diagram(std::string_view source);

} // namespace artin
