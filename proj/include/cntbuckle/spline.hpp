#pragma once

#include <Eigen/Dense>

namespace cntbuckle {

// Uniform knot grid along the strip direction: knots y_i = i*h for
// i in [-3, m_sections+3], active cubic splines i in [-1, m_sections+1].
struct KnotGrid {
  double length_a;
  int m_sections;

  KnotGrid(double length_a_, int m_sections_);

  double h() const { return length_a / m_sections; }
  int n_splines() const { return m_sections + 3; }
};

enum class EndCondition { Free, Simple, Clamped };

// Maps reduced spline amplitudes to the full set while satisfying the end
// conditions exactly. Columns are orthonormal.
struct ConstraintTransform {
  Eigen::MatrixXd T;  // (m+3) x (m+3 - n_constraints)
};

// Cubic spline centered at knot i, normalized to 2/3 at its own knot,
// or its first/second derivative. Zero outside [y_{i-2}, y_{i+2}].
double eval_b3(const KnotGrid& grid, int i, double y, int deriv = 0);

// Hermitian cubic shape functions over one strip width: k=1..4 for
// left deflection, left slope, right deflection, right slope.
double eval_hermite(double strip_width_b, int k, double x, int deriv = 0);

// f(y) = sum_i amplitudes[i+1] * psi_i(y) over the active splines.
double eval_series(const KnotGrid& grid, const Eigen::VectorXd& amplitudes, double y,
                   int deriv = 0);

ConstraintTransform build_constraint_transform(const KnotGrid& grid, EndCondition end0,
                                               EndCondition end1);

}  // namespace cntbuckle
