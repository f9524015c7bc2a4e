#pragma once

#include <Eigen/Dense>

#include "cntbuckle/assembly.hpp"

namespace cntbuckle {

struct BucklingResult {
  double sigma_cr = 0.0;     // critical stress magnitude, GPa
  double lambda = 0.0;       // filled via normalized_factor by the caller
  Eigen::VectorXd mode;      // reduced space, scaled to unit max entry
  int multiplicity = 1;      // eigenvalues within 1e-6 relative of the critical one
  double residual = 0.0;     // relative eigen residual
  int n_strips = 0;
  int m_sections = 0;
};

// Smallest sigma > 0 with K*phi = sigma*Kg*phi, via the largest eigenvalue of
// the K-normalized problem Kg*v = mu*K*v (sigma = 1/mu_max).
BucklingResult smallest_critical_load(const AssembledSystem& sys);

// Classical buckling coefficient: sigma_cr divided by the plate's Euler
// reference stress pi^2*E*h^2 / (12*(1-nu^2)*b^2).
double normalized_factor(double sigma_cr, double E_ref, double nu_ref, double plate_width_b,
                         double thickness);

}  // namespace cntbuckle
