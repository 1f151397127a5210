#include "artin/artin_monoid.hpp"
#include "artin/braid_moves.hpp"
#include "artin/error.hpp"
#include "artin/tits.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace artin {

bool AxiomReport::passed(const std::string &axiom) const {
  for (const auto &c : checks)
    if (c.axiom == axiom)
      return c.status == AxiomCheck::Status::pass;
  return false;
}

bool AxiomReport::all_applicable_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const AxiomCheck &c) {
    return c.status == AxiomCheck::Status::fail;
  });
}

/// Elements of a finite W with their ShortLex words, multiplication by
/// generators on both sides and descent sets. Simple elements of the monoid
/// are exactly the lifts of these.
struct SimpleTable {
  std::size_t rank = 0;
  std::vector<Word> words;         ///< index 0 is the identity
  std::vector<std::size_t> right;  ///< right[i * rank + s] = index of w_i s
  std::vector<std::size_t> left;   ///< left[i * rank + s] = index of s w_i
  std::vector<VertexSet> rdesc, ldesc;

  std::size_t gen(Gen s) const { return right[s]; }
};

namespace {

inline constexpr std::size_t kSimpleTableLimit = 60'000;

// Breadth-first search over the (faithful) reflection matrices. Parents are
// visited in ShortLex order and generators ascending, so the first word that
// reaches an element is its ShortLex-minimal reduced word.
std::shared_ptr<const SimpleTable> build_simple_table(const CoxeterDiagram &d) {
  const std::size_t n = d.rank();
  const auto gens = reflection_matrices(d);
  auto key = [](const Matrix &m) {
    std::vector<long long> k(static_cast<std::size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.size(); ++i)
      k[static_cast<std::size_t>(i)] = std::llround(m.data()[i] * 1e6);
    return k;
  };
  auto t = std::make_shared<SimpleTable>();
  t->rank = n;
  std::map<std::vector<long long>, std::size_t> ids;
  std::vector<Matrix> mats{Matrix::Identity(n, n)};
  ids[key(mats[0])] = 0;
  t->words.push_back({});
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (Gen s = 0; s < n; ++s) {
      Matrix p = mats[i] * gens[s];
      if (ids.emplace(key(p), mats.size()).second) {
        if (mats.size() >= kSimpleTableLimit)
          return nullptr;
        mats.push_back(std::move(p));
        t->words.push_back(concat(t->words[i], Word{s}));
      }
    }
  const std::size_t size = mats.size();
  t->right.resize(size * n);
  t->left.resize(size * n);
  t->rdesc.assign(size, 0);
  t->ldesc.assign(size, 0);
  for (std::size_t i = 0; i < size; ++i)
    for (Gen s = 0; s < n; ++s) {
      t->right[i * n + s] = ids.at(key(mats[i] * gens[s]));
      t->left[i * n + s] = ids.at(key(gens[s] * mats[i]));
      if (t->words[t->right[i * n + s]].size() < t->words[i].size())
        t->rdesc[i] |= bit(s);
      if (t->words[t->left[i * n + s]].size() < t->words[i].size())
        t->ldesc[i] |= bit(s);
    }
  return t;
}

/// Moves letters of y into x until L(y) is inside R(x), the left-weighted condition.
bool settle_pair(const SimpleTable &t, std::size_t &x, std::size_t &y) {
  bool changed = false;
  for (;;) {
    const VertexSet movable = t.ldesc[y] & ~t.rdesc[x];
    if (!movable)
      return changed;
    const Gen s = static_cast<Gen>(std::countr_zero(movable));
    x = t.right[x * t.rank + s];
    y = t.left[y * t.rank + s];
    changed = true;
  }
}

void stabilize(const SimpleTable &t, std::vector<std::size_t> &f) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = f.size(); i-- > 1;)
      changed |= settle_pair(t, f[i - 1], f[i]);
    const auto before = f.size();
    f.erase(std::remove(f.begin(), f.end(), std::size_t{0}), f.end());
    changed |= f.size() != before;
  }
}

Word reversed(const Word &w) { return Word(w.rbegin(), w.rend()); }

} // namespace

ArtinMonoid::ArtinMonoid(CoxeterDiagram d, Limits limits, std::size_t infinite_lcm_length_cap)
    : coxeter_(std::move(d), limits), infinite_lcm_cap_(infinite_lcm_length_cap) {
  if (coxeter_.is_finite() && diagram().rank() > 0)
    simples_ = build_simple_table(diagram());
}

ArtinMonoid::Factors ArtinMonoid::left_normal_form(const Word &w) const {
  Factors f;
  for (Gen s : w) {
    if (s >= diagram().rank())
      throw WordError("artin_monoid", "letter index out of range");
    f.push_back(simples_->gen(s));
    stabilize(*simples_, f);
  }
  return f;
}

// Greedy: the smallest left divisor of length one is the smallest letter of
// L(first factor); strip it and repeat.
Word ArtinMonoid::shortlex_word(Factors f) const {
  Word out;
  while (!f.empty()) {
    const Gen s = static_cast<Gen>(std::countr_zero(simples_->ldesc[f[0]]));
    out.push_back(s);
    f[0] = simples_->left[f[0] * simples_->rank + s];
    stabilize(*simples_, f);
  }
  return out;
}

std::vector<Word> ArtinMonoid::relation_closure(const Word &w) const {
  for (Gen g : w)
    if (g >= diagram().rank())
      throw WordError("artin_monoid", "letter index out of range");
  const std::size_t cap = coxeter_.limits().closure_cap;
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for_each_braid_move(diagram(), cur, [&](Word next) {
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceededError("artin_monoid", "relation closure too large", cap);
        queue.push_back(std::move(next));
      }
    });
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

MonoidElement ArtinMonoid::canonicalize(const Word &w) const {
  if (simples_)
    return {shortlex_word(left_normal_form(w))};
  return {relation_closure(w).front()};
}

MonoidElement ArtinMonoid::element(std::string_view text) const {
  return canonicalize(diagram().parse_word(text));
}

bool ArtinMonoid::equal(const Word &u, const Word &v) const {
  if (u.size() != v.size())
    return false;
  if (simples_)
    return left_normal_form(u) == left_normal_form(v);
  auto closure = relation_closure(u);
  return std::binary_search(closure.begin(), closure.end(), v, shortlex_less);
}

MonoidElement ArtinMonoid::multiply(const MonoidElement &a, const MonoidElement &b) const {
  return canonicalize(concat(a.word, b.word));
}

std::optional<MonoidElement> ArtinMonoid::divides(Side side, const MonoidElement &divisor,
                                                  const MonoidElement &a) const {
  const std::size_t k = divisor.length();
  if (k > a.length())
    return std::nullopt;
  if (simples_) {
    // Right division is left division of the reversed words.
    const bool right = side == Side::right;
    Factors f = left_normal_form(right ? reversed(a.word) : a.word);
    for (Gen s : right ? reversed(divisor.word) : divisor.word) {
      if (f.empty() || !contains(simples_->ldesc[f[0]], s))
        return std::nullopt;
      f[0] = simples_->left[f[0] * simples_->rank + s];
      stabilize(*simples_, f);
    }
    Word rest = shortlex_word(std::move(f));
    return right ? canonicalize(reversed(rest)) : MonoidElement{rest};
  }
  // The closure is the whole class of `a`, so any factorisation a = z * divisor
  // shows up as some word ending in the canonical word of the divisor.
  for (const Word &w : relation_closure(a.word)) {
    if (side == Side::right) {
      if (std::equal(divisor.word.begin(), divisor.word.end(), w.end() - k))
        return canonicalize(Word(w.begin(), w.end() - k));
    } else {
      if (std::equal(divisor.word.begin(), divisor.word.end(), w.begin()))
        return canonicalize(Word(w.begin() + k, w.end()));
    }
  }
  return std::nullopt;
}

std::vector<MonoidElement> ArtinMonoid::divisors(Side side, const MonoidElement &a) const {
  std::set<Word> pieces;
  for (const Word &w : relation_closure(a.word))
    for (std::size_t k = 0; k <= w.size(); ++k)
      pieces.insert(side == Side::left ? Word(w.begin(), w.begin() + k)
                                       : Word(w.end() - k, w.end()));
  std::set<Word, ShortLexLess> canon;
  for (const Word &p : pieces)
    canon.insert(canonicalize(p).word);
  std::vector<MonoidElement> out;
  for (const Word &w : canon)
    out.push_back({w});
  return out;
}

VertexSet ArtinMonoid::length_one_divisors(Side side, const MonoidElement &a) const {
  VertexSet out = 0;
  if (a.is_identity())
    return out;
  if (simples_)
    return simples_->ldesc[left_normal_form(side == Side::left ? a.word : reversed(a.word))[0]];
  for (const Word &w : relation_closure(a.word))
    out |= bit(side == Side::left ? w.front() : w.back());
  return out;
}

MonoidElement ArtinMonoid::gcd(const MonoidElement &a, const MonoidElement &b,
                               Side side) const {
  const MonoidElement &shorter = a.length() <= b.length() ? a : b;
  const MonoidElement &other = a.length() <= b.length() ? b : a;
  std::vector<MonoidElement> common;
  for (const auto &d : divisors(side, shorter))
    if (divides(side, d, other))
      common.push_back(d);
  std::size_t best = 0;
  for (const auto &d : common)
    best = std::max(best, d.length());
  std::vector<MonoidElement> top;
  for (const auto &d : common)
    if (d.length() == best)
      top.push_back(d);
  if (top.size() != 1)
    throw Error("artin_monoid", "common divisors have no unique maximal element");
  // Every common divisor must divide the candidate for it to be greatest.
  for (const auto &d : common)
    if (!divides(side, d, top.front()))
      throw Error("artin_monoid", "common divisors have no unique maximal element");
  return top.front();
}

LcmResult ArtinMonoid::lcm(const MonoidElement &a, const MonoidElement &b, Side side) const {
  LcmResult result;
  if (is_finite()) {
    const std::size_t delta_len = garside_element().length();
    result.length_bound = (a.length() + b.length()) * std::max<std::size_t>(delta_len, 1);
  } else {
    result.length_bound = std::max({infinite_lcm_cap_, a.length(), b.length()});
  }
  // Multiples of the longer element, level by level; the first level that holds
  // a common multiple holds only the lcm (it divides any common multiple).
  const MonoidElement &base = a.length() >= b.length() ? a : b;
  const MonoidElement &probe = a.length() >= b.length() ? b : a;
  std::set<Word, ShortLexLess> level{base.word};
  std::size_t explored = 1;
  const std::size_t cap = coxeter_.limits().ball_cap;
  for (std::size_t len = base.length(); len <= result.length_bound; ++len) {
    std::vector<MonoidElement> hits;
    for (const Word &m : level)
      if (divides(side, probe, {m}))
        hits.push_back({m});
    if (!hits.empty()) {
      if (hits.size() != 1)
        throw Error("artin_monoid", "minimal common multiples are not unique");
      result.lcm = hits.front();
      return result;
    }
    std::set<Word, ShortLexLess> next;
    for (const Word &m : level)
      for (Gen s = 0; s < diagram().rank(); ++s) {
        Word w = side == Side::left ? concat(m, Word{s}) : concat(Word{s}, m);
        next.insert(canonicalize(w).word);
      }
    explored += next.size();
    if (explored > cap)
      throw CapExceededError("artin_monoid", "lcm search explored too many multiples", cap);
    level = std::move(next);
  }
  return result;
}

MonoidElement ArtinMonoid::garside_element(VertexSet t) const {
  t &= diagram().all();
  if (!is_finite_subset(diagram(), t))
    throw NotFiniteTypeError("artin_monoid",
                             "Garside element requires a finite-type subset");
  if (simples_ && t == diagram().all())
    return {simples_->words.back()}; // BFS ends at the unique longest element
  return canonicalize(coxeter_.longest_element(t).word);
}

std::vector<Gen> ArtinMonoid::garside_permutation() const {
  if (!is_finite())
    throw NotFiniteTypeError("artin_monoid", "Garside permutation requires finite type");
  const MonoidElement delta = garside_element();
  const std::size_t n = diagram().rank();
  std::vector<Gen> sigma(n);
  std::vector<bool> used(n, false);
  for (Gen s = 0; s < n; ++s) {
    const Word left = concat(delta.word, Word{s});
    bool found = false;
    for (Gen t = 0; t < n && !found; ++t)
      if (equal(left, concat(Word{t}, delta.word))) {
        sigma[s] = t;
        found = true;
      }
    if (!found)
      throw Error("artin_monoid", "no generator sigma(s) with Delta s = sigma(s) Delta");
    if (used[sigma[s]])
      throw Error("artin_monoid", "Garside permutation is not injective");
    used[sigma[s]] = true;
  }
  return sigma;
}

NormalForm ArtinMonoid::garside_normal_form(const MonoidElement &a) const {
  NormalForm nf;
  MonoidElement rest = canonicalize(a.word);
  while (!rest.is_identity()) {
    const VertexSet t = length_one_divisors(Side::right, rest);
    const MonoidElement block = garside_element(t);
    auto cofactor = divides(Side::right, block, rest);
    if (!cofactor)
      throw Error("artin_monoid", "Delta_T does not right-divide the remaining element");
    nf.blocks.push_back(t);
    rest = std::move(*cofactor);
  }
  std::reverse(nf.blocks.begin(), nf.blocks.end());
  return nf;
}

MonoidElement ArtinMonoid::from_normal_form(const NormalForm &nf) const {
  Word w;
  for (VertexSet t : nf.blocks) {
    auto block = garside_element(t);
    w.insert(w.end(), block.word.begin(), block.word.end());
  }
  return canonicalize(w);
}

std::vector<std::vector<MonoidElement>>
ArtinMonoid::elements_up_to(std::size_t max_length) const {
  std::vector<std::vector<MonoidElement>> out{{MonoidElement{}}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::set<Word, ShortLexLess> next;
    for (const auto &m : out.back())
      for (Gen s = 0; s < diagram().rank(); ++s)
        next.insert(canonicalize(concat(m.word, Word{s})).word);
    std::vector<MonoidElement> level;
    for (const Word &w : next)
      level.push_back({w});
    out.push_back(std::move(level));
  }
  return out;
}

namespace {

/// product[i * n + j] = index of canonical(e_i e_j) in `canon`, or a fresh id.
struct ProductTable {
  std::vector<std::size_t> product;
};

ProductTable products_serial(const ArtinMonoid &m, const std::vector<MonoidElement> &elems) {
  const std::size_t n = elems.size();
  std::vector<Word> words(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      words[i * n + j] = m.multiply(elems[i], elems[j]).word;
  std::map<Word, std::size_t> ids;
  ProductTable t;
  for (const Word &w : words)
    t.product.push_back(ids.emplace(w, ids.size()).first->second);
  return t;
}

ProductTable products_parallel(const ArtinMonoid &m, const std::vector<MonoidElement> &elems) {
  const std::size_t n = elems.size();
  std::vector<Word> words(n * n);
  const long long total = static_cast<long long>(n * n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (long long k = 0; k < total; ++k) {
    try {
      words[k] = m.multiply(elems[k / n], elems[k % n]).word;
    } catch (...) {
#pragma omp critical
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  std::map<Word, std::size_t> ids;
  ProductTable t;
  for (const Word &w : words)
    t.product.push_back(ids.emplace(w, ids.size()).first->second);
  return t;
}

/// Runs `fn(i, j)` over all index pairs. `fn` returns true on a failure; pairs
/// after the lowest failing index may be skipped, so the lowest failure is
/// always computed in either execution mode.
template <class Fn> void for_pairs(std::size_t n, Execution exec, Fn &&fn) {
  const long long total = static_cast<long long>(n * n);
  if (exec == Execution::serial) {
    for (long long k = 0; k < total; ++k)
      if (fn(static_cast<std::size_t>(k) / n, static_cast<std::size_t>(k) % n))
        return;
    return;
  }
  std::atomic<long long> first_failure{total};
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (long long k = 0; k < total; ++k) {
    if (k > first_failure.load(std::memory_order_relaxed))
      continue;
    try {
      if (fn(static_cast<std::size_t>(k) / n, static_cast<std::size_t>(k) % n)) {
        long long cur = first_failure.load();
        while (k < cur && !first_failure.compare_exchange_weak(cur, k)) {
        }
      }
    } catch (...) {
#pragma omp critical
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
}

using Status = AxiomCheck::Status;

} // namespace

AxiomReport ArtinMonoid::verify_garside_axioms(std::size_t length_cap, Execution exec) const {
  AxiomReport report;
  report.length_cap = length_cap;
  std::vector<MonoidElement> elems;
  for (auto &level : elements_up_to(length_cap))
    elems.insert(elems.end(), level.begin(), level.end());
  const std::size_t n = elems.size();
  report.elements_checked = n;
  const auto &d = diagram();
  auto show = [&](const MonoidElement &e) { return d.format_word(e.word); };

  // (i) cancellativity: a -> ac and a -> ca are injective for every c.
  {
    ProductTable table =
        exec == Execution::serial ? products_serial(*this, elems) : products_parallel(*this, elems);
    AxiomCheck check{"(i) cancellative", Status::pass, ""};
    for (std::size_t c = 0; c < n && check.status == Status::pass; ++c) {
      std::map<std::size_t, std::size_t> right_seen, left_seen;
      for (std::size_t a = 0; a < n; ++a) {
        auto [it_r, fresh_r] = right_seen.emplace(table.product[a * n + c], a);
        auto [it_l, fresh_l] = left_seen.emplace(table.product[c * n + a], a);
        if (!fresh_r || !fresh_l) {
          std::size_t other = !fresh_r ? it_r->second : it_l->second;
          check.status = Status::fail;
          check.detail = (!fresh_r ? "a c = b c" : "c a = c b") + std::string(" with a = ") +
                         show(elems[other]) + ", b = " + show(elems[a]) + ", c = " +
                         show(elems[c]);
          break;
        }
      }
    }
    if (check.status == Status::pass)
      check.detail = "checked all triples up to length " + std::to_string(length_cap);
    report.checks.push_back(check);
  }

  // (ii) length additivity and l(a) = 0 only for e.
  {
    AxiomCheck check{"(ii) length additive", Status::pass, ""};
    std::vector<std::uint8_t> bad(n * n, 0);
    for_pairs(n, exec, [&](std::size_t i, std::size_t j) {
      auto w = concat(elems[i].word, elems[j].word);
      for (const Word &member : relation_closure(w))
        if (member.size() != w.size())
          bad[i * n + j] = 1;
      return bad[i * n + j] != 0;
    });
    for (std::size_t k = 0; k < n * n; ++k)
      if (bad[k]) {
        check.status = Status::fail;
        check.detail = "l(ab) != l(a) + l(b) for a = " + show(elems[k / n]) +
                       ", b = " + show(elems[k % n]);
        break;
      }
    for (const auto &e : elems)
      if (e.length() == 0 && !e.is_identity()) {
        check.status = Status::fail;
        check.detail = "nontrivial element of length 0";
      }
    if (check.status == Status::pass)
      check.detail = "closure classes are length-homogeneous";
    report.checks.push_back(check);
  }

  // (iii) gcd and lcm on both sides for every pair.
  {
    AxiomCheck check{"(iii) gcd and lcm exist", Status::pass, ""};
    std::vector<std::string> failures(n * n);
    for_pairs(n, exec, [&](std::size_t i, std::size_t j) {
      if (j < i)
        return false;
      for (Side side : {Side::left, Side::right}) {
        const char *tag = side == Side::left ? "left" : "right";
        try {
          (void)gcd(elems[i], elems[j], side);
        } catch (const Error &) {
          failures[i * n + j] = std::string(tag) + "-gcd missing for " + show(elems[i]) +
                                ", " + show(elems[j]);
          return true;
        }
        auto l = lcm(elems[i], elems[j], side);
        if (!l.lcm) {
          failures[i * n + j] = std::string(tag) + "-lcm(" + show(elems[i]) + ", " +
                                show(elems[j]) + ") none within length " +
                                std::to_string(l.length_bound);
          return true;
        }
      }
      return false;
    });
    for (const auto &f : failures)
      if (!f.empty()) {
        check.status = Status::fail;
        check.detail = f;
        break;
      }
    if (check.status == Status::pass)
      check.detail = "all pairs up to length " + std::to_string(length_cap);
    report.checks.push_back(check);
  }

  if (!is_finite()) {
    report.checks.push_back({"(iv) Garside element", Status::not_applicable,
                             "no Garside element: W is infinite"});
    report.checks.push_back({"(v) finitely many divisors", Status::not_applicable,
                             "no Garside element: W is infinite"});
    return report;
  }

  const MonoidElement delta = garside_element();
  const auto left = divisors(Side::left, delta);
  const auto right = divisors(Side::right, delta);
  report.delta_divisors = left.size();

  // (iv) left divisors = right divisors, and they contain the generators.
  {
    AxiomCheck check{"(iv) Garside element", Status::pass, ""};
    if (left != right) {
      check.status = Status::fail;
      check.detail = "left and right divisor sets of Delta differ";
    } else {
      for (Gen s = 0; s < d.rank(); ++s)
        if (!std::binary_search(left.begin(), left.end(), MonoidElement{Word{s}},
                                [](const auto &x, const auto &y) {
                                  return shortlex_less(x.word, y.word);
                                })) {
          check.status = Status::fail;
          check.detail = "generator " + d.name(s) + " does not divide Delta";
        }
    }
    if (check.status == Status::pass)
      check.detail = "Delta = " + show(delta) + "; divisor sets agree and contain S";
    report.checks.push_back(check);
  }

  // (v) |divisors(Delta)| = |W| and the divisors are the section image of W.
  {
    AxiomCheck check{"(v) finitely many divisors", Status::pass, ""};
    auto group = coxeter_.enumerate(std::nullopt, exec).flatten();
    std::set<Word, ShortLexLess> section;
    for (const auto &w : group)
      section.insert(canonicalize(w.word).word);
    std::set<Word, ShortLexLess> divs;
    for (const auto &x : left)
      divs.insert(x.word);
    if (divs.size() != group.size() || divs != section) {
      check.status = Status::fail;
      check.detail = std::to_string(divs.size()) + " divisors vs |W| = " +
                     std::to_string(group.size());
    } else {
      check.detail = std::to_string(divs.size()) + " divisors = |W|, equal to section image";
    }
    report.checks.push_back(check);
  }
  return report;
}

} // namespace artin
