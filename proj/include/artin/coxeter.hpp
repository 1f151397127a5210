#pragma once

#include "artin/diagram.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace artin {

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// Deterministic search limits shared by the word-problem modules.
struct Limits {
  std::size_t closure_cap = kDefaultCap; ///< words in one relation closure
  std::size_t ball_cap = kDefaultCap;    ///< elements in one enumeration
  std::size_t max_permutation_rank = 8;  ///< n! guard for Coxeter elements
};

/// A Coxeter group element stored as its normal form: the ShortLex-minimal
/// reduced word in declared vertex order. Equality is equality of words.
struct CoxeterElement {
  Word word;

  std::size_t length() const { return word.size(); }
  bool is_identity() const { return word.empty(); }
  auto operator<=>(const CoxeterElement &) const = default;
};

struct Enumeration {
  std::vector<std::vector<CoxeterElement>> by_length;
  bool complete = false; ///< true when the whole (parabolic) group was reached

  std::size_t size() const;
  std::vector<std::size_t> profile() const;
  std::vector<CoxeterElement> flatten() const;
};

class CoxeterGroup {
public:
  explicit CoxeterGroup(CoxeterDiagram d, Limits limits = {});

  const CoxeterDiagram &diagram() const { return diagram_; }
  const Limits &limits() const { return limits_; }
  bool is_finite() const { return finite_; }

  /// Free reduction, then braid-move closure; any word of the closure with a
  /// repeated adjacent letter is shortened and the closure restarted. The
  /// ShortLex minimum of a repetition-free closure is the normal form.
  CoxeterElement normalize(const Word &w) const;
  CoxeterElement element(std::string_view text) const;

  CoxeterElement identity() const { return {}; }
  CoxeterElement generator(Gen g) const { return {Word{g}}; }
  CoxeterElement multiply(const CoxeterElement &a, const CoxeterElement &b) const;
  CoxeterElement invert(const CoxeterElement &a) const;

  /// Right descent set {t : l(wt) < l(w)}.
  VertexSet right_descents(const CoxeterElement &w) const;
  bool in_parabolic(const CoxeterElement &w, VertexSet t) const;
  bool is_t_minimal(const CoxeterElement &w, VertexSet t) const;

  /// Minimal-length element of the coset wW_T by greedy right descent.
  CoxeterElement t_minimal_representative(const CoxeterElement &w, VertexSet t) const;

  /// Ball of radius `max_length` in W_T (or all of W_T when empty; W_T must then be finite).
  Enumeration enumerate(VertexSet t, std::optional<std::size_t> max_length,
                        Execution exec = Execution::parallel) const;
  Enumeration enumerate(std::optional<std::size_t> max_length,
                        Execution exec = Execution::parallel) const {
    return enumerate(diagram_.all(), max_length, exec);
  }

  CoxeterElement longest_element() const { return longest_element(diagram_.all()); }
  CoxeterElement longest_element(VertexSet t) const;

  /// {w s w^-1}; for infinite groups `ball` bounds l(w).
  std::vector<CoxeterElement> reflections(std::optional<std::size_t> ball = std::nullopt) const;

  /// Normal forms of s_{p(1)} ... s_{p(n)} over all permutations p, deduplicated.
  std::vector<CoxeterElement> coxeter_elements() const;

private:
  CoxeterDiagram diagram_;
  Limits limits_;
  bool finite_ = false;
};

Word free_reduce(const Word &w);

} // namespace artin
