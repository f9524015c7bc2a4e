#include "cntbuckle/micromech.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cntbuckle {

namespace {

double checked_div(double num, double den, const char* what) {
  if (std::abs(den) < 1e-300 * (1.0 + std::abs(num))) {
    throw std::domain_error(std::string("mori_tanaka_random: vanishing denominator ") + what);
  }
  return num / den;
}

}  // namespace

IsotropicElastic::IsotropicElastic(double E_, double nu_) : E(E_), nu(nu_) {
  if (!(E > 0.0)) throw std::domain_error("IsotropicElastic: E must be positive");
  if (!(nu > -1.0 && nu < 0.5)) {
    throw std::domain_error("IsotropicElastic: nu must lie in (-1, 0.5)");
  }
}

BulkShear::BulkShear(double K_, double G_) : K(K_), G(G_) {
  if (!(K > 0.0) || !(G > 0.0)) throw std::domain_error("BulkShear: K and G must be positive");
}

HillModuli::HillModuli(double k_, double l_, double m_, double n_, double p_)
    : k(k_), l(l_), m(m_), n(n_), p(p_) {
  if (!(k > 0.0) || !(m > 0.0) || !(n > 0.0) || !(p > 0.0)) {
    throw std::domain_error("HillModuli: k, m, n, p must be positive");
  }
  if (!(n * k - l * l > 0.0)) {
    throw std::domain_error("HillModuli: n*k - l^2 must be positive");
  }
}

CompositeSpec::CompositeSpec(IsotropicElastic matrix_, HillModuli cnt_, double v_cn_)
    : matrix(matrix_), cnt(cnt_), v_cn(v_cn_) {
  if (!(v_cn >= 0.0 && v_cn < 1.0)) {
    throw std::domain_error("CompositeSpec: v_cn must lie in [0, 1)");
  }
}

ReducedStiffness::ReducedStiffness(double q11_, double q12_, double q66_)
    : q11(q11_), q12(q12_), q22(q11_), q66(q66_) {
  if (!(q11 > 0.0) || !(q66 > 0.0) || !(q11 - std::abs(q12) > 0.0)) {
    throw std::domain_error("ReducedStiffness: matrix must be positive definite");
  }
}

BulkShear to_bulk_shear(const IsotropicElastic& mat) {
  return BulkShear(mat.E / (3.0 * (1.0 - 2.0 * mat.nu)), mat.E / (2.0 * (1.0 + mat.nu)));
}

IsotropicElastic effective_E_nu(const BulkShear& kg) {
  const double K = kg.K;
  const double G = kg.G;
  return IsotropicElastic(9.0 * K * G / (3.0 * K + G),
                          (3.0 * K - 2.0 * G) / (6.0 * K + 2.0 * G));
}

std::pair<BulkShear, MTIntermediates> mori_tanaka_random(const CompositeSpec& spec) {
  const BulkShear m0 = to_bulk_shear(spec.matrix);
  const double Km = m0.K;
  const double Gm = m0.G;
  const HillModuli& c = spec.cnt;

  const double alpha =
      checked_div(3.0 * (Km + Gm) + c.k - c.l, 3.0 * (Gm + c.k), "G_m + k_cn (alpha)");

  const double beta =
      (checked_div(4.0 * Gm + 2.0 * c.k + c.l, 3.0 * (Gm + c.k), "G_m + k_cn (beta)") +
       checked_div(4.0 * Gm, Gm + c.p, "G_m + p_cn (beta)") +
       checked_div(2.0 * (Gm * (3.0 * Km + Gm) + Gm * (3.0 * Km + 7.0 * Gm)),
                   Gm * (3.0 * Km + Gm) + c.m * (3.0 * Km + 7.0 * Gm),
                   "shear interaction (beta)")) /
      5.0;

  const double delta =
      (c.n + 2.0 * c.l +
       checked_div((2.0 * c.k + c.l) * (3.0 * Km + 2.0 * Gm - c.l), Gm + c.k,
                   "G_m + k_cn (delta)")) /
      3.0;

  const double eta =
      (2.0 / 3.0 * (c.n - c.l) +
       checked_div(8.0 * Gm * c.p, Gm + c.p, "G_m + p_cn (eta)") +
       checked_div(8.0 * c.m * Gm * (3.0 * Km + 4.0 * Gm),
                   3.0 * Km * (c.m + Gm) + Gm * (7.0 * c.m + Gm),
                   "shear interaction (eta)") +
       checked_div(2.0 * (c.k - c.l) * (2.0 * Gm + c.l), 3.0 * (Gm + c.k),
                   "G_m + k_cn (eta)")) /
      5.0;

  const double v = spec.v_cn;
  const double vm = 1.0 - v;
  const double K = Km + checked_div(v * (delta - 3.0 * Km * alpha), 3.0 * (vm + v * alpha),
                                    "V_m + V_cn*alpha");
  const double G = Gm + checked_div(v * (eta - 2.0 * Gm * beta), 2.0 * (vm + v * beta),
                                    "V_m + V_cn*beta");

  return {BulkShear(K, G), MTIntermediates{alpha, beta, delta, eta}};
}

ReducedStiffness reduced_stiffness(const IsotropicElastic& mat, double g) {
  if (!(std::abs(mat.nu) < 1.0)) {
    throw std::domain_error("reduced_stiffness: |nu| must be below 1");
  }
  const double q11 = mat.E / (1.0 - mat.nu * mat.nu);
  return ReducedStiffness(q11, mat.nu * q11, g);
}

HillModuli matrix_equivalent_hill(const BulkShear& mat) {
  return HillModuli(mat.K + mat.G / 3.0, mat.K - 2.0 * mat.G / 3.0, mat.G,
                    mat.K + 4.0 * mat.G / 3.0, mat.G);
}

}  // namespace cntbuckle
