#include "artin/homology.hpp"

#include <algorithm>
#include <set>

namespace artin {

void SparseMatrix::add(std::size_t r, std::size_t c, const BigInt &v) {
  if (v == 0)
    return;
  auto &cell = data[r][c];
  cell += v;
  if (cell == 0)
    data[r].erase(c);
}

std::vector<BigInt> SmithResult::torsion() const {
  std::vector<BigInt> out;
  for (const auto &f : invariant_factors)
    if (f > 1)
      out.push_back(f);
  return out;
}

namespace {

BigInt abs_value(const BigInt &v) { return v < 0 ? BigInt(-v) : v; }

} // namespace

SmithResult smith_normal_form(DenseMatrix a) {
  SmithResult out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto find_min = [&](std::size_t &pr, std::size_t &pc) {
      bool found = false;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (!found || abs_value(a[i][j]) < best)) {
            best = abs_value(a[i][j]);
            pr = i;
            pc = j;
            found = true;
          }
      return found;
    };
    std::size_t pr = 0, pc = 0;
    if (!find_min(pr, pc))
      break;
    std::swap(a[t], a[pr]);
    for (auto &row : a)
      std::swap(row[t], row[pc]);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0)
          continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j)
          a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0)
          continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i)
          a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto &row : a)
            std::swap(row[t], row[j]);
          dirty = true;
        }
      }
      if (dirty)
        continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k)
              a[t][k] += a[i][k];
            fixed = true;
          }
      if (!fixed)
        break;
    }
    out.invariant_factors.push_back(abs_value(a[t][t]));
    ++t;
  }
  out.rank = out.invariant_factors.size();
  return out;
}

SmithResult smith_normal_form(SparseMatrix m) {
  std::vector<std::set<std::size_t>> col_rows(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (const auto &[c, v] : m.data[r])
      col_rows[c].insert(r);

  std::size_t unit_pivots = 0;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t c = 0; c < m.cols; ++c) {
      // Unit entry in the sparsest row keeps fill-in low.
      std::size_t pivot_row = m.rows;
      for (std::size_t r : col_rows[c]) {
        const BigInt &v = m.data[r].at(c);
        if ((v == 1 || v == -1) &&
            (pivot_row == m.rows || m.data[r].size() < m.data[pivot_row].size()))
          pivot_row = r;
      }
      if (pivot_row == m.rows)
        continue;
      const auto pivot = m.data[pivot_row];
      const BigInt p = pivot.at(c);
      const std::vector<std::size_t> targets(col_rows[c].begin(), col_rows[c].end());
      for (std::size_t r : targets) {
        if (r == pivot_row)
          continue;
        const BigInt f = m.data[r].at(c) * p; // p = +-1, so p^-1 = p
        for (const auto &[c2, v] : pivot) {
          auto &row = m.data[r];
          auto it = row.find(c2);
          if (it == row.end()) {
            row.emplace(c2, -f * v);
            col_rows[c2].insert(r);
          } else {
            it->second -= f * v;
            if (it->second == 0) {
              row.erase(it);
              col_rows[c2].erase(r);
            }
          }
        }
      }
      for (const auto &[c2, v] : pivot)
        col_rows[c2].erase(pivot_row);
      m.data[pivot_row].clear();
      ++unit_pivots;
      progress = true;
    }
  }

  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < m.rows; ++r)
    if (!m.data[r].empty())
      live_rows.push_back(r);
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!col_rows[c].empty())
      live_cols.push_back(c);
  DenseMatrix dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto &[c, v] : m.data[live_rows[i]])
      dense[i][std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin()] = v;

  SmithResult rest = smith_normal_form(std::move(dense));
  SmithResult out;
  out.invariant_factors.assign(unit_pivots, BigInt(1));
  out.invariant_factors.insert(out.invariant_factors.end(), rest.invariant_factors.begin(),
                               rest.invariant_factors.end());
  out.rank = out.invariant_factors.size();
  return out;
}

std::string HomologyGroup::to_string() const {
  std::vector<std::string> parts;
  if (betti == 1)
    parts.push_back("Z");
  else if (betti > 1)
    parts.push_back("Z^" + std::to_string(betti));
  for (const auto &t : torsion)
    parts.push_back("Z/" + t.str());
  if (parts.empty())
    return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    out += " + " + parts[i];
  return out;
}

} // namespace artin
