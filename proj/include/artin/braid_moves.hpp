#pragma once

#include "artin/diagram.hpp"

namespace artin {

/// Calls `fn(neighbour)` for each word reachable from `w` by a single
/// generalised braid relation  sts... = tst...  applied at some position.
template <class Fn>
void for_each_braid_move(const CoxeterDiagram &d, const Word &w, Fn &&fn) {
  const std::size_t len = w.size();
  for (std::size_t i = 0; i + 1 < len; ++i) {
    const Gen s = w[i], t = w[i + 1];
    if (s == t)
      continue;
    const int m = d.label(s, t);
    if (m == kInfinity || i + static_cast<std::size_t>(m) > len)
      continue;
    bool alternating = true;
    for (int j = 2; j < m && alternating; ++j)
      alternating = w[i + j] == (j % 2 == 0 ? s : t);
    if (!alternating)
      continue;
    Word next = w;
    for (int j = 0; j < m; ++j)
      next[i + j] = (j % 2 == 0) ? t : s;
    fn(std::move(next));
  }
}

/// Alternating word s t s t ... of the given length.
inline Word alternating(Gen s, Gen t, int length) {
  Word w;
  for (int j = 0; j < length; ++j)
    w.push_back(j % 2 == 0 ? s : t);
  return w;
}

} // namespace artin
