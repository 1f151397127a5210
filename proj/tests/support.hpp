#pragma once

#include "artin/diagram.hpp"

#include <random>
#include <string>
#include <vector>

namespace test_support {

/// Random labelled graph; each pair gets a label from `labels` (2 means no edge).
inline artin::CoxeterDiagram random_diagram(std::mt19937 &rng, int rank,
                                            const std::vector<int> &labels) {
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i)
    names.push_back("g" + std::to_string(i));
  std::vector<artin::Edge> edges;
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      int m = labels[pick(rng)];
      if (m != 2)
        edges.push_back({names[i], names[j], m});
    }
  return artin::CoxeterDiagram(names, edges);
}

/// Number of components of the graph whose edges are the odd labels.
inline std::size_t odd_label_components(const artin::CoxeterDiagram &d) {
  const std::size_t n = d.rank();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i)
    parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int m = d.label(static_cast<artin::Gen>(i), static_cast<artin::Gen>(j));
      if (m != artin::kInfinity && m % 2 == 1) {
        auto a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --count;
        }
      }
    }
  return count;
}

} // namespace test_support
