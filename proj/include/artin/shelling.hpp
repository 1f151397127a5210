#pragma once

#include "artin/coxeter.hpp"
#include "artin/execution.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace artin {

using VertexList = std::vector<std::size_t>; ///< sorted abstract vertex ids

/// A pure n-dimensional union of simplices, each given by its n+1 vertices.
struct ChamberComplex {
  std::size_t n = 0;
  std::vector<VertexList> chambers;

  /// Every chamber has exactly n+1 distinct vertices; throws ShellingInputError.
  void validate() const;
};

/// l : chambers -> N with exactly one chamber at 0.
struct IndexFunction {
  std::vector<std::size_t> values;

  void validate(const ChamberComplex &cc) const;
  std::size_t base() const;
  std::size_t max() const;
};

/// Chambers of C(k), in chamber order.
std::vector<VertexList> build_filtration(const ChamberComplex &cc, const IndexFunction &l,
                                         std::size_t k);

struct Witness {
  std::size_t chamber = 0;
  std::optional<std::size_t> other; ///< second chamber for Claim (B)
  VertexList face;                  ///< offending shared face, empty if nothing is shared
  std::string reason;
};

struct LevelResult {
  std::size_t level = 0; ///< chambers with l = level + 1 attach to C(level)
  std::vector<std::size_t> chambers;
  bool claim_a = true;
  bool claim_b = true;
  std::optional<Witness> a_witness;
  std::optional<Witness> b_witness;
};

struct ClaimsReport {
  std::size_t n = 0;
  std::vector<LevelResult> levels;
  bool claim_a = true;
  bool claim_b = true;
  /// Chambers glued along their whole boundary; any one makes C a sphere-like union.
  std::vector<std::size_t> full_boundary;
  std::optional<std::string> conclusion; ///< only when both claims hold everywhere

  nlohmann::ordered_json to_json() const;
};

ClaimsReport verify_claims(const ChamberComplex &cc, const IndexFunction &l,
                           Execution exec = Execution::parallel);

struct ShellingResult {
  bool ok = true;
  std::optional<std::size_t> position; ///< index into the order of the first violation
  std::optional<Witness> violation;

  nlohmann::ordered_json to_json() const;
};

ShellingResult is_shelling(const ChamberComplex &cc, const std::vector<std::size_t> &order);

struct CoxeterChambers {
  ChamberComplex complex;
  IndexFunction index; ///< Coxeter length
  std::vector<CoxeterElement> elements;
};

/// Chamber w has vertices (w W_{S-{s}}, s) for s in S; adjacent chambers share n vertices.
CoxeterChambers coxeter_chamber_complex(const CoxeterGroup &g,
                                        std::optional<std::size_t> ball = std::nullopt);

ChamberComplex parse_chamber_complex(const nlohmann::json &j);

} // namespace artin
