#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace artin {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix, one ordered map per row.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::map<std::size_t, BigInt>> data;

  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}
  void add(std::size_t r, std::size_t c, const BigInt &v);
};

using DenseMatrix = std::vector<std::vector<BigInt>>;

struct SmithResult {
  std::size_t rank = 0;
  /// Nonzero diagonal of the Smith form, positive, each dividing the next.
  std::vector<BigInt> invariant_factors;

  std::vector<BigInt> torsion() const; ///< factors > 1
};

SmithResult smith_normal_form(DenseMatrix m);

/// Eliminates unit pivots sparsely, then finishes the remainder densely.
SmithResult smith_normal_form(SparseMatrix m);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  std::string to_string() const; ///< "Z^3 + Z/2", "Z", "0"
};

struct AbelianGroup : HomologyGroup {};

} // namespace artin
