#include "cntbuckle/spline.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cntbuckle {

KnotGrid::KnotGrid(double length_a_, int m_sections_)
    : length_a(length_a_), m_sections(m_sections_) {
  if (!(length_a > 0.0)) throw std::domain_error("KnotGrid: length_a must be positive");
  if (m_sections < 3) throw std::domain_error("KnotGrid: m_sections must be at least 3");
}

double eval_b3(const KnotGrid& grid, int i, double y, int deriv) {
  if (i < -1 || i > grid.m_sections + 1) {
    throw std::invalid_argument("eval_b3: spline index outside active range");
  }
  if (deriv < 0 || deriv > 2) {
    throw std::invalid_argument("eval_b3: derivative order must be 0, 1 or 2");
  }
  const double h = grid.h();
  const double u = y / h - (i - 2);  // local coordinate over the support [0, 4]
  if (u <= 0.0 || u >= 4.0) return 0.0;

  const int seg = std::min(static_cast<int>(u), 3);
  const double s = u - seg;

  double v = 0.0;
  switch (deriv) {
    case 0:
      switch (seg) {
        case 0: v = s * s * s / 6.0; break;
        case 1: v = (1.0 + 3.0 * s + 3.0 * s * s - 3.0 * s * s * s) / 6.0; break;
        case 2: v = (4.0 - 6.0 * s * s + 3.0 * s * s * s) / 6.0; break;
        case 3: v = (1.0 - s) * (1.0 - s) * (1.0 - s) / 6.0; break;
      }
      return v;
    case 1:
      switch (seg) {
        case 0: v = s * s / 2.0; break;
        case 1: v = (3.0 + 6.0 * s - 9.0 * s * s) / 6.0; break;
        case 2: v = (-12.0 * s + 9.0 * s * s) / 6.0; break;
        case 3: v = -(1.0 - s) * (1.0 - s) / 2.0; break;
      }
      return v / h;
    default:
      switch (seg) {
        case 0: v = s; break;
        case 1: v = 1.0 - 3.0 * s; break;
        case 2: v = -2.0 + 3.0 * s; break;
        case 3: v = 1.0 - s; break;
      }
      return v / (h * h);
  }
}

double eval_hermite(double strip_width_b, int k, double x, int deriv) {
  if (!(strip_width_b > 0.0)) {
    throw std::domain_error("eval_hermite: strip width must be positive");
  }
  if (k < 1 || k > 4) throw std::invalid_argument("eval_hermite: k must be 1..4");
  if (deriv < 0 || deriv > 2) {
    throw std::invalid_argument("eval_hermite: derivative order must be 0, 1 or 2");
  }
  if (x < 0.0 || x > strip_width_b) {
    throw std::domain_error("eval_hermite: x outside the strip");
  }
  const double b = strip_width_b;
  const double r = x / b;
  switch (k) {
    case 1:
      if (deriv == 0) return 1.0 - 3.0 * r * r + 2.0 * r * r * r;
      if (deriv == 1) return (-6.0 * r + 6.0 * r * r) / b;
      return (-6.0 + 12.0 * r) / (b * b);
    case 2:
      if (deriv == 0) return b * (r - 2.0 * r * r + r * r * r);
      if (deriv == 1) return 1.0 - 4.0 * r + 3.0 * r * r;
      return (-4.0 + 6.0 * r) / b;
    case 3:
      if (deriv == 0) return 3.0 * r * r - 2.0 * r * r * r;
      if (deriv == 1) return (6.0 * r - 6.0 * r * r) / b;
      return (6.0 - 12.0 * r) / (b * b);
    default:
      if (deriv == 0) return b * (r * r * r - r * r);
      if (deriv == 1) return 3.0 * r * r - 2.0 * r;
      return (6.0 * r - 2.0) / b;
  }
}

double eval_series(const KnotGrid& grid, const Eigen::VectorXd& amplitudes, double y,
                   int deriv) {
  if (amplitudes.size() != grid.n_splines()) {
    throw std::invalid_argument("eval_series: amplitude count must equal m_sections + 3");
  }
  double f = 0.0;
  for (int i = -1; i <= grid.m_sections + 1; ++i) {
    const double a = amplitudes(i + 1);
    if (a != 0.0) f += a * eval_b3(grid, i, y, deriv);
  }
  return f;
}

ConstraintTransform build_constraint_transform(const KnotGrid& grid, EndCondition end0,
                                               EndCondition end1) {
  const int M = grid.n_splines();
  std::vector<std::pair<double, int>> constraints;  // (end coordinate, derivative order)
  if (end0 != EndCondition::Free) constraints.emplace_back(0.0, 0);
  if (end0 == EndCondition::Clamped) constraints.emplace_back(0.0, 1);
  if (end1 != EndCondition::Free) constraints.emplace_back(grid.length_a, 0);
  if (end1 == EndCondition::Clamped) constraints.emplace_back(grid.length_a, 1);

  if (constraints.empty()) {
    return ConstraintTransform{Eigen::MatrixXd::Identity(M, M)};
  }

  Eigen::MatrixXd C(static_cast<int>(constraints.size()), M);
  for (int r = 0; r < C.rows(); ++r) {
    for (int i = -1; i <= grid.m_sections + 1; ++i) {
      C(r, i + 1) = eval_b3(grid, i, constraints[r].first, constraints[r].second);
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(C, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int s = 0; s < sv.size(); ++s) {
    if (sv(s) > 1e-12 * sv(0)) ++rank;
  }
  return ConstraintTransform{svd.matrixV().rightCols(M - rank)};
}

}  // namespace cntbuckle
