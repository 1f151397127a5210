#pragma once

#include "artin/coxeter.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace artin {

/// An element of the positive monoid, stored as the ShortLex-minimal word of
/// its relation-closure class.
struct MonoidElement {
  Word word;

  std::size_t length() const { return word.size(); }
  bool is_identity() const { return word.empty(); }
  auto operator<=>(const MonoidElement &) const = default;
};

enum class Side { left, right };

/// Blocks Delta_{T_k}, ..., Delta_{T_0}; most significant block first.
struct NormalForm {
  std::vector<VertexSet> blocks;
};

struct LcmResult {
  std::optional<MonoidElement> lcm; ///< empty: no common multiple within the search bound
  std::size_t length_bound = 0;     ///< search bound that was used
};

struct AxiomCheck {
  enum class Status { pass, fail, not_applicable };
  std::string axiom;
  Status status = Status::pass;
  std::string detail;
};

struct AxiomReport {
  std::size_t length_cap = 0;
  std::size_t elements_checked = 0;
  std::optional<std::size_t> delta_divisors;
  std::vector<AxiomCheck> checks;

  bool passed(const std::string &axiom) const;
  bool all_applicable_pass() const;
};

struct SimpleTable;

class ArtinMonoid {
public:
  explicit ArtinMonoid(CoxeterDiagram d, Limits limits = {},
                       std::size_t infinite_lcm_length_cap = 16);

  const CoxeterDiagram &diagram() const { return coxeter_.diagram(); }
  const CoxeterGroup &coxeter() const { return coxeter_; }
  bool is_finite() const { return coxeter_.is_finite(); }

  /// Every word reachable by braid relations, sorted ShortLex; all have equal length.
  std::vector<Word> relation_closure(const Word &w) const;

  MonoidElement canonicalize(const Word &w) const;
  MonoidElement element(std::string_view text) const;
  bool equal(const Word &u, const Word &v) const;
  MonoidElement multiply(const MonoidElement &a, const MonoidElement &b) const;

  /// Right: cofactor z with a = z * divisor. Left: a = divisor * z.
  std::optional<MonoidElement> divides(Side side, const MonoidElement &divisor,
                                       const MonoidElement &a) const;

  /// All divisors of `a` on the given side, sorted ShortLex.
  std::vector<MonoidElement> divisors(Side side, const MonoidElement &a) const;

  /// Generators dividing `a` on the given side.
  VertexSet length_one_divisors(Side side, const MonoidElement &a) const;

  MonoidElement gcd(const MonoidElement &a, const MonoidElement &b, Side side) const;

  /// Least common multiple for the side's divisibility order: for Side::left
  /// the least m with a <=_L m and b <=_L m.
  LcmResult lcm(const MonoidElement &a, const MonoidElement &b, Side side) const;

  /// Delta_T, the section of the longest element of W_T. T must be finite type.
  MonoidElement garside_element(VertexSet t) const;
  MonoidElement garside_element() const { return garside_element(diagram().all()); }

  /// sigma with Delta s = sigma(s) Delta; entry i is sigma(generator i).
  std::vector<Gen> garside_permutation() const;

  /// True when finite-type arithmetic runs on a precomputed table of W instead
  /// of relation closures. Results are identical either way.
  bool uses_simple_table() const { return simples_ != nullptr; }

  NormalForm garside_normal_form(const MonoidElement &a) const;
  MonoidElement from_normal_form(const NormalForm &nf) const;

  /// Canonical elements of length <= max_length, grouped by length.
  std::vector<std::vector<MonoidElement>> elements_up_to(std::size_t max_length) const;

  AxiomReport verify_garside_axioms(std::size_t length_cap,
                                    Execution exec = Execution::parallel) const;

private:
  using Factors = std::vector<std::size_t>;
  Factors left_normal_form(const Word &w) const;
  Word shortlex_word(Factors f) const;

  CoxeterGroup coxeter_;
  std::size_t infinite_lcm_cap_;
  std::shared_ptr<const SimpleTable> simples_;
};

} // namespace artin
