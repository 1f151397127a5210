#include "artin/coxeter.hpp"
#include "artin/braid_moves.hpp"
#include "artin/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace artin {

Word free_reduce(const Word &w) {
  Word out;
  out.reserve(w.size());
  for (Gen g : w) {
    if (!out.empty() && out.back() == g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

std::size_t Enumeration::size() const {
  std::size_t n = 0;
  for (const auto &level : by_length)
    n += level.size();
  return n;
}

std::vector<std::size_t> Enumeration::profile() const {
  std::vector<std::size_t> out;
  for (const auto &level : by_length)
    out.push_back(level.size());
  return out;
}

std::vector<CoxeterElement> Enumeration::flatten() const {
  std::vector<CoxeterElement> out;
  for (const auto &level : by_length)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

CoxeterGroup::CoxeterGroup(CoxeterDiagram d, Limits limits)
    : diagram_(std::move(d)), limits_(limits), finite_(is_finite_type(diagram_).finite) {}

namespace {

std::optional<std::size_t> adjacent_repeat(const Word &w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1])
      return i;
  return std::nullopt;
}

} // namespace

CoxeterElement CoxeterGroup::normalize(const Word &input) const {
  for (Gen g : input)
    if (g >= diagram_.rank())
      throw WordError("coxeter", "letter index out of range");
  Word current = free_reduce(input);
  for (;;) {
    std::unordered_set<Word, WordHash> seen{current};
    std::deque<Word> queue{current};
    std::optional<Word> shorter;
    while (!queue.empty() && !shorter) {
      Word w = std::move(queue.front());
      queue.pop_front();
      for_each_braid_move(diagram_, w, [&](Word next) {
        if (shorter)
          return;
        if (auto at = adjacent_repeat(next)) {
          next.erase(next.begin() + *at, next.begin() + *at + 2);
          shorter = free_reduce(next);
          return;
        }
        if (seen.insert(next).second) {
          if (seen.size() > limits_.closure_cap)
            throw CapExceededError("coxeter", "braid-move closure too large",
                                   limits_.closure_cap);
          queue.push_back(std::move(next));
        }
      });
    }
    if (shorter) {
      current = std::move(*shorter);
      continue;
    }
    return {*std::min_element(seen.begin(), seen.end(), shortlex_less)};
  }
}

CoxeterElement CoxeterGroup::element(std::string_view text) const {
  return normalize(diagram_.parse_word(text));
}

CoxeterElement CoxeterGroup::multiply(const CoxeterElement &a, const CoxeterElement &b) const {
  return normalize(concat(a.word, b.word));
}

CoxeterElement CoxeterGroup::invert(const CoxeterElement &a) const {
  Word w(a.word.rbegin(), a.word.rend());
  return normalize(w);
}

VertexSet CoxeterGroup::right_descents(const CoxeterElement &w) const {
  VertexSet out = 0;
  for (Gen t = 0; t < diagram_.rank(); ++t) {
    Word wt = w.word;
    wt.push_back(t);
    if (normalize(wt).length() < w.length())
      out |= bit(t);
  }
  return out;
}

bool CoxeterGroup::in_parabolic(const CoxeterElement &w, VertexSet t) const {
  // Every reduced word of an element uses the same set of letters.
  return is_subset(support(w.word), t);
}

bool CoxeterGroup::is_t_minimal(const CoxeterElement &w, VertexSet t) const {
  for (Gen g = 0; g < diagram_.rank(); ++g) {
    if (!contains(t, g))
      continue;
    Word wt = w.word;
    wt.push_back(g);
    if (normalize(wt).length() < w.length())
      return false;
  }
  return true;
}

CoxeterElement CoxeterGroup::t_minimal_representative(const CoxeterElement &w,
                                                      VertexSet t) const {
  CoxeterElement current = normalize(w.word);
  for (bool shortened = true; shortened;) {
    shortened = false;
    for (Gen g = 0; g < diagram_.rank() && !shortened; ++g) {
      if (!contains(t, g))
        continue;
      Word wt = current.word;
      wt.push_back(g);
      CoxeterElement next = normalize(wt);
      if (next.length() < current.length()) {
        current = std::move(next);
        shortened = true;
      }
    }
  }
  return current;
}

namespace {

using Level = std::vector<CoxeterElement>;

std::vector<std::vector<Word>> expand_serial(const CoxeterGroup &g, const Level &level,
                                             const std::vector<Gen> &gens) {
  std::vector<std::vector<Word>> out(level.size());
  for (std::size_t i = 0; i < level.size(); ++i)
    for (Gen s : gens) {
      Word w = level[i].word;
      w.push_back(s);
      CoxeterElement e = g.normalize(w);
      if (e.length() == level[i].length() + 1)
        out[i].push_back(std::move(e.word));
    }
  return out;
}

std::vector<std::vector<Word>> expand_parallel(const CoxeterGroup &g, const Level &level,
                                               const std::vector<Gen> &gens) {
  std::vector<std::vector<Word>> out(level.size());
  const long long count = static_cast<long long>(level.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) {
    try {
      for (Gen s : gens) {
        Word w = level[i].word;
        w.push_back(s);
        CoxeterElement e = g.normalize(w);
        if (e.length() == level[i].length() + 1)
          out[i].push_back(std::move(e.word));
      }
    } catch (...) {
#pragma omp critical
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return out;
}

} // namespace

Enumeration CoxeterGroup::enumerate(VertexSet t, std::optional<std::size_t> max_length,
                                    Execution exec) const {
  t &= diagram_.all();
  if (!max_length && !is_finite_subset(diagram_, t))
    throw NotFiniteTypeError("coxeter", "enumerating all elements requires a finite-type "
                                        "(parabolic) subgroup; pass a length bound");
  std::vector<Gen> gens;
  for (Gen g = 0; g < diagram_.rank(); ++g)
    if (contains(t, g))
      gens.push_back(g);

  Enumeration out;
  out.by_length.push_back({identity()});
  std::size_t total = 1;
  for (;;) {
    const Level &last = out.by_length.back();
    if (last.empty()) {
      out.by_length.pop_back();
      out.complete = true;
      break;
    }
    if (max_length && out.by_length.size() > *max_length) {
      out.complete = false;
      break;
    }
    auto candidates = exec == Execution::serial ? expand_serial(*this, last, gens)
                                                : expand_parallel(*this, last, gens);
    std::set<Word, ShortLexLess> next;
    for (auto &list : candidates)
      for (auto &w : list)
        next.insert(std::move(w));
    total += next.size();
    if (total > limits_.ball_cap)
      throw CapExceededError("coxeter", "enumeration exceeded the element guard",
                             limits_.ball_cap);
    Level level;
    level.reserve(next.size());
    for (const auto &w : next)
      level.push_back({w});
    out.by_length.push_back(std::move(level));
  }
  // A ball whose next sphere turns out empty is the whole group.
  if (!out.complete && max_length && out.by_length.size() == *max_length + 1) {
    auto probe = expand_serial(*this, out.by_length.back(), gens);
    out.complete = std::all_of(probe.begin(), probe.end(),
                               [](const auto &v) { return v.empty(); });
  }
  return out;
}

CoxeterElement CoxeterGroup::longest_element(VertexSet t) const {
  t &= diagram_.all();
  if (!is_finite_subset(diagram_, t))
    throw NotFiniteTypeError("coxeter", "longest element requires a finite-type subset");
  Enumeration e = enumerate(t, std::nullopt);
  const auto &top = e.by_length.back();
  if (top.size() != 1)
    throw Error("coxeter", "longest element is not unique; enumeration is inconsistent");
  return top.front();
}

std::vector<CoxeterElement> CoxeterGroup::reflections(std::optional<std::size_t> ball) const {
  if (!ball && !finite_)
    throw NotFiniteTypeError("coxeter",
                             "reflections of an infinite group need a ball bound on l(w)");
  Enumeration e = enumerate(ball);
  std::set<Word, ShortLexLess> out;
  for (const auto &w : e.flatten())
    for (Gen s = 0; s < diagram_.rank(); ++s) {
      Word conj = w.word;
      conj.push_back(s);
      conj.insert(conj.end(), w.word.rbegin(), w.word.rend());
      out.insert(normalize(conj).word);
    }
  std::vector<CoxeterElement> result;
  for (const auto &w : out)
    result.push_back({w});
  return result;
}

std::vector<CoxeterElement> CoxeterGroup::coxeter_elements() const {
  const std::size_t n = diagram_.rank();
  if (n > limits_.max_permutation_rank)
    throw CapExceededError("coxeter", "Coxeter-element enumeration over rank " +
                                          std::to_string(n),
                           limits_.max_permutation_rank);
  Word perm(n);
  std::iota(perm.begin(), perm.end(), Gen{0});
  std::set<Word, ShortLexLess> out;
  do {
    out.insert(normalize(perm).word);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<CoxeterElement> result;
  for (const auto &w : out)
    result.push_back({w});
  return result;
}

} // namespace artin
