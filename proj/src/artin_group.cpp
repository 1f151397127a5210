#include "artin/artin_group.hpp"
#include "artin/error.hpp"

#include <charconv>
#include <sstream>

namespace artin {

ArtinGroup::ArtinGroup(CoxeterDiagram d, Limits limits) : monoid_(std::move(d), limits) {
  if (!monoid_.is_finite())
    throw NotFiniteTypeError("artin_group",
                             "group operations are only available for finite-type diagrams");
  delta_ = monoid_.garside_element();
  sigma_ = monoid_.garside_permutation();
  sigma_inverse_.resize(sigma_.size());
  for (Gen s = 0; s < sigma_.size(); ++s)
    sigma_inverse_[sigma_[s]] = s;
  for (Gen s = 0; s < diagram().rank(); ++s) {
    auto b = monoid_.divides(Side::right, MonoidElement{Word{s}}, delta_);
    if (!b)
      throw Error("artin_group", "generator does not right-divide Delta");
    delta_over_.push_back(std::move(*b));
  }
}

std::vector<SignedLetter> ArtinGroup::parse(std::string_view text) const {
  std::vector<SignedLetter> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int power = 1;
    std::string name = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string exp = tok.substr(caret + 1);
      if (!exp.empty() && exp.front() == '+')
        exp.erase(0, 1);
      auto [p, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), power);
      if (ec != std::errc() || p != exp.data() + exp.size() || power == 0)
        throw WordError("artin_group", "bad exponent in '" + tok + "'");
    }
    Gen g = diagram().require_index(name);
    for (int i = 0; i < std::abs(power); ++i)
      out.push_back({g, power > 0 ? 1 : -1});
  }
  return out;
}

Word ArtinGroup::twist(const Word &w, int power) const {
  Word out = w;
  const auto &map = power >= 0 ? sigma_ : sigma_inverse_;
  for (int i = 0; i < std::abs(power); ++i)
    for (Gen &g : out)
      g = map[g];
  return out;
}

GroupElement ArtinGroup::normalize(int k, Word a) const {
  GroupElement g{k, monoid_.canonicalize(a)};
  while (auto rest = monoid_.divides(Side::left, delta_, g.a)) {
    g.a = std::move(*rest);
    ++g.k;
  }
  return g;
}

GroupElement ArtinGroup::append_letter(GroupElement g, Gen s) const {
  g.a.word.push_back(s);
  return normalize(g.k, std::move(g.a.word));
}

GroupElement ArtinGroup::embed(const MonoidElement &a) const {
  GroupElement g;
  for (Gen s : a.word)
    g = append_letter(std::move(g), s);
  return g;
}

GroupElement ArtinGroup::multiply(const GroupElement &g, const GroupElement &h) const {
  // Delta^k1 a1 Delta^k2 a2 = Delta^(k1+k2) sigma^-k2(a1) a2
  GroupElement out{g.k + h.k, monoid_.canonicalize(twist(g.a.word, -h.k))};
  for (Gen s : h.a.word)
    out = append_letter(std::move(out), s);
  return out;
}

GroupElement ArtinGroup::from_letters(const std::vector<SignedLetter> &letters) const {
  GroupElement g;
  for (const auto &l : letters) {
    if (l.gen >= diagram().rank())
      throw WordError("artin_group", "letter index out of range");
    if (l.exponent > 0)
      g = append_letter(std::move(g), l.gen);
    else // s^-1 = Delta^-1 b_s where Delta = b_s s
      g = multiply(g, GroupElement{-1, delta_over_[l.gen]});
  }
  return g;
}

GroupElement ArtinGroup::invert(const GroupElement &g) const {
  std::vector<SignedLetter> letters;
  for (auto it = g.a.word.rbegin(); it != g.a.word.rend(); ++it)
    letters.push_back({*it, -1});
  return multiply(from_letters(letters), GroupElement{-g.k, {}});
}

Fraction ArtinGroup::fraction_decomposition(const GroupElement &g) const {
  if (g.k >= 0) {
    Word b;
    for (int i = 0; i < g.k; ++i)
      b.insert(b.end(), delta_.word.begin(), delta_.word.end());
    b.insert(b.end(), g.a.word.begin(), g.a.word.end());
    return {MonoidElement{}, monoid_.canonicalize(b)};
  }
  Word a;
  for (int i = 0; i < -g.k; ++i)
    a.insert(a.end(), delta_.word.begin(), delta_.word.end());
  Fraction f{monoid_.canonicalize(a), g.a};
  // a^-1 b = (c a')^-1 (c b') = a'^-1 b': strip common left divisors letter by letter.
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (Gen s = 0; s < diagram().rank() && !stripped; ++s) {
      const MonoidElement gen{Word{s}};
      auto ra = monoid_.divides(Side::left, gen, f.a);
      if (!ra)
        continue;
      auto rb = monoid_.divides(Side::left, gen, f.b);
      if (!rb)
        continue;
      f.a = std::move(*ra);
      f.b = std::move(*rb);
      stripped = true;
    }
  }
  return f;
}

GroupElement ArtinGroup::canonical_section(const CoxeterElement &w) const {
  return normalize(0, coxeter().normalize(w.word).word);
}

CoxeterElement ArtinGroup::project(const GroupElement &g) const {
  // Delta maps to the longest element, an involution.
  Word w;
  if (g.k % 2 != 0)
    w = delta_.word;
  w.insert(w.end(), g.a.word.begin(), g.a.word.end());
  return coxeter().normalize(w);
}

std::string ArtinGroup::format(const GroupElement &g) const {
  std::string out = "Delta^" + std::to_string(g.k);
  if (!g.a.is_identity())
    out += " " + diagram().format_word(g.a.word);
  return out;
}

} // namespace artin
