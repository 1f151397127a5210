#include "artin/tits.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace artin {

Matrix bilinear_form(const CoxeterDiagram &d) {
  const auto n = static_cast<Eigen::Index>(d.rank());
  Matrix b = Matrix::Identity(n, n);
  for (Gen i = 0; i < n; ++i)
    for (Gen j = 0; j < n; ++j) {
      if (i == j)
        continue;
      int m = d.label(i, j);
      if (m == kInfinity)
        b(i, j) = -1.0;
      else if (m == 2)
        b(i, j) = 0.0;
      else if (m == 3)
        b(i, j) = -0.5;
      else
        b(i, j) = -std::cos(std::numbers::pi / m);
    }
  return b;
}

std::vector<Matrix> reflection_matrices(const CoxeterDiagram &d) {
  const Matrix b = bilinear_form(d);
  const auto n = b.rows();
  std::vector<Matrix> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix s = Matrix::Identity(n, n);
    s.row(i) -= 2.0 * b.row(i);
    out.push_back(std::move(s));
  }
  return out;
}

SignatureReport signature(const Matrix &form, double tol) {
  SignatureReport r;
  r.tolerance = tol;
  if (form.rows() == 0)
    return r;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(form, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double ev = solver.eigenvalues()(i);
    r.eigenvalues.push_back(ev);
    if (ev > tol)
      ++r.positive;
    else if (ev < -tol)
      ++r.negative;
    else
      ++r.zero;
  }
  return r;
}

Matrix word_to_matrix(const CoxeterDiagram &d, const Word &w) {
  const auto sigmas = reflection_matrices(d);
  const auto n = static_cast<Eigen::Index>(d.rank());
  Matrix m = Matrix::Identity(n, n);
  for (Gen g : w)
    m = m * sigmas.at(g);
  return m;
}

bool approx_equal(const Matrix &a, const Matrix &b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

std::optional<int> pair_order(const CoxeterDiagram &d, Gen s, Gen t, double tol,
                              std::optional<int> cap) {
  int limit = 0;
  if (cap) {
    limit = *cap;
  } else {
    int max_label = 2;
    for (Gen a = 0; a < d.rank(); ++a)
      for (Gen b = 0; b < d.rank(); ++b)
        if (a != b && d.label(a, b) != kInfinity)
          max_label = std::max(max_label, d.label(a, b));
    limit = 4 * max_label;
  }
  const auto sigmas = reflection_matrices(d);
  const Matrix step = sigmas.at(s) * sigmas.at(t);
  const auto n = step.rows();
  const Matrix id = Matrix::Identity(n, n);
  Matrix power = id;
  for (int k = 1; k <= limit; ++k) {
    power = power * step;
    if (approx_equal(power, id, tol))
      return k;
  }
  return std::nullopt;
}

RepresentationReport check_representation(const CoxeterDiagram &d, double tol) {
  RepresentationReport r;
  r.ok = true;
  const Matrix b = bilinear_form(d);
  const auto sigmas = reflection_matrices(d);
  const auto n = b.rows();
  const Matrix id = Matrix::Identity(n, n);
  for (Gen i = 0; i < n; ++i) {
    GeneratorCheck g;
    g.gen = i;
    const Matrix &s = sigmas[i];
    g.involution = approx_equal(s * s, id, tol);
    Eigen::VectorXd e = Eigen::VectorXd::Unit(n, i);
    g.negates_root = ((s * e) + e).cwiseAbs().maxCoeff() <= tol;
    g.preserves_form = approx_equal(s.transpose() * b * s, b, tol);
    r.ok = r.ok && g.involution && g.negates_root && g.preserves_form;
    r.generators.push_back(g);
  }
  for (Gen i = 0; i < n; ++i)
    for (Gen j = i + 1; j < n; ++j) {
      PairCheck p;
      p.s = i;
      p.t = j;
      p.label = d.label(i, j);
      p.order = pair_order(d, i, j, tol);
      p.matches = p.label == kInfinity ? !p.order.has_value() : p.order == p.label;
      r.ok = r.ok && p.matches;
      r.pairs.push_back(p);
    }
  return r;
}

} // namespace artin
