#pragma once

#include "artin/diagram.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace artin {

using Matrix = Eigen::MatrixXd;

inline constexpr double kDefaultTolerance = 1e-8;

/// The symmetric form B(e_i, e_j): 1 on the diagonal, -cos(pi/m) off it,
/// -1 for infinite labels. Labels 2 and 3 give exactly 0 and -1/2.
Matrix bilinear_form(const CoxeterDiagram &d);

/// sigma_i(v) = v - 2 B(e_i, v) e_i, one matrix per generator.
std::vector<Matrix> reflection_matrices(const CoxeterDiagram &d);

struct SignatureReport {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  double tolerance = kDefaultTolerance;
  std::vector<double> eigenvalues; ///< ascending
};

SignatureReport signature(const Matrix &form, double tol = kDefaultTolerance);

/// Ordered product of reflection matrices; the empty word gives the identity.
Matrix word_to_matrix(const CoxeterDiagram &d, const Word &w);

/// Smallest k >= 1 with (sigma_s sigma_t)^k = I within `tol`, searching up to `cap`.
/// The default cap is 4 * max finite label of the diagram.
std::optional<int> pair_order(const CoxeterDiagram &d, Gen s, Gen t, double tol = 1e-9,
                              std::optional<int> cap = std::nullopt);

bool approx_equal(const Matrix &a, const Matrix &b, double tol);

struct GeneratorCheck {
  Gen gen = 0;
  bool involution = false;    ///< sigma^2 = I
  bool negates_root = false;  ///< sigma e_i = -e_i
  bool preserves_form = false; ///< sigma^T B sigma = B
};

struct PairCheck {
  Gen s = 0, t = 0;
  int label = 2;
  std::optional<int> order;
  bool matches = false; ///< order equals the label (or none found for infinity)
};

struct RepresentationReport {
  std::vector<GeneratorCheck> generators;
  std::vector<PairCheck> pairs;
  bool ok = false;
};

RepresentationReport check_representation(const CoxeterDiagram &d, double tol = 1e-9);

} // namespace artin
