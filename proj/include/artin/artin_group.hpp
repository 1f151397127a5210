#pragma once

#include "artin/artin_monoid.hpp"

#include <string_view>
#include <vector>

namespace artin {

/// g = Delta^k a with Delta not a left divisor of a, so (k, a) is unique.
struct GroupElement {
  int k = 0;
  MonoidElement a;

  auto operator<=>(const GroupElement &) const = default;
};

struct SignedLetter {
  Gen gen = 0;
  int exponent = 1; ///< +1 or -1
};

/// g = numerator^-1... as a left fraction: g = a^-1 b.
struct Fraction {
  MonoidElement a;
  MonoidElement b;
};

/// Finite-type Artin groups through the Garside structure of the positive monoid.
class ArtinGroup {
public:
  explicit ArtinGroup(CoxeterDiagram d, Limits limits = {});

  const CoxeterDiagram &diagram() const { return monoid_.diagram(); }
  const ArtinMonoid &monoid() const { return monoid_; }
  const CoxeterGroup &coxeter() const { return monoid_.coxeter(); }
  const MonoidElement &delta() const { return delta_; }
  const std::vector<Gen> &sigma() const { return sigma_; }

  /// Letters with an optional "^-1" suffix, e.g. "s t^-1 s".
  std::vector<SignedLetter> parse(std::string_view text) const;

  GroupElement identity() const { return {}; }
  GroupElement embed(const MonoidElement &a) const;
  GroupElement from_letters(const std::vector<SignedLetter> &letters) const;
  GroupElement from_text(std::string_view text) const { return from_letters(parse(text)); }

  GroupElement multiply(const GroupElement &g, const GroupElement &h) const;
  GroupElement invert(const GroupElement &g) const;
  bool equal(const GroupElement &g, const GroupElement &h) const { return g == h; }

  /// Reduced left fraction: a and b share no nontrivial left divisor.
  Fraction fraction_decomposition(const GroupElement &g) const;

  GroupElement canonical_section(const CoxeterElement &w) const;
  CoxeterElement project(const GroupElement &g) const;
  bool is_pure(const GroupElement &g) const { return project(g).is_identity(); }

  /// sigma^power applied letterwise; power may be negative.
  Word twist(const Word &w, int power) const;

  std::string format(const GroupElement &g) const;

private:
  GroupElement normalize(int k, Word a) const;
  GroupElement append_letter(GroupElement g, Gen s) const;

  ArtinMonoid monoid_;
  MonoidElement delta_;
  std::vector<Gen> sigma_;
  std::vector<Gen> sigma_inverse_;
  std::vector<MonoidElement> delta_over_; ///< b_s with Delta = b_s s
};

} // namespace artin
