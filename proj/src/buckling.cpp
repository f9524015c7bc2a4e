#include "cntbuckle/buckling.hpp"

#include <cmath>
#include <stdexcept>

namespace cntbuckle {

BucklingResult smallest_critical_load(const AssembledSystem& sys) {
  if (sys.is_mechanism) {
    throw std::runtime_error("unconstrained mechanism (bc_code " + sys.bc_code + ")");
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(
      sys.Kg, sys.K, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigen decomposition failed (bc_code " + sys.bc_code + ")");
  }
  const auto& mu = es.eigenvalues();  // ascending
  const int last = static_cast<int>(mu.size()) - 1;
  const double mu_max = mu(last);
  const double mu_scale = std::max(std::abs(mu(0)), std::abs(mu_max));
  if (!(mu_max > 1e-12 * mu_scale)) {
    throw std::runtime_error("load state cannot cause buckling (bc_code " + sys.bc_code + ")");
  }

  BucklingResult res;
  res.sigma_cr = 1.0 / mu_max;
  res.mode = es.eigenvectors().col(last);
  int imax = 0;
  res.mode.cwiseAbs().maxCoeff(&imax);
  res.mode /= res.mode(imax);

  res.multiplicity = 0;
  for (int i = 0; i <= last; ++i) {
    if (mu(i) >= mu_max * (1.0 - 1e-6)) ++res.multiplicity;
  }

  const double rnum = ((sys.K - res.sigma_cr * sys.Kg) * res.mode).norm();
  const double rden =
      (sys.K.norm() + res.sigma_cr * sys.Kg.norm()) * res.mode.norm();
  res.residual = rnum / rden;

  res.n_strips = sys.n_strips;
  res.m_sections = sys.m_sections;
  return res;
}

double normalized_factor(double sigma_cr, double E_ref, double nu_ref, double plate_width_b,
                         double thickness) {
  if (!(sigma_cr > 0.0) || !(E_ref > 0.0) || !(plate_width_b > 0.0) || !(thickness > 0.0)) {
    throw std::domain_error("normalized_factor: inputs must be positive");
  }
  if (!(std::abs(nu_ref) < 1.0)) {
    throw std::domain_error("normalized_factor: |nu_ref| must be below 1");
  }
  const double pi = M_PI;
  return 12.0 * (1.0 - nu_ref * nu_ref) * sigma_cr * plate_width_b * plate_width_b /
         (pi * pi * E_ref * thickness * thickness);
}

}  // namespace cntbuckle
