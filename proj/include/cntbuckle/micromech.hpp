#pragma once

#include <utility>

namespace cntbuckle {

// Isotropic elastic constants. Units: GPa for moduli throughout the library.
struct IsotropicElastic {
  double E;
  double nu;

  IsotropicElastic(double E_, double nu_);
};

struct BulkShear {
  double K;
  double G;

  BulkShear(double K_, double G_);
};

// Hill constants (k, l, m, n, p) of a transversely isotropic inclusion:
// plane-strain bulk, cross, transverse shear, constrained axial, axial shear.
struct HillModuli {
  double k;
  double l;
  double m;
  double n;
  double p;

  HillModuli(double k_, double l_, double m_, double n_, double p_);
};

struct CompositeSpec {
  IsotropicElastic matrix;
  HillModuli cnt;
  double v_cn;  // inclusion volume fraction; matrix fraction is 1 - v_cn

  CompositeSpec(IsotropicElastic matrix_, HillModuli cnt_, double v_cn_);
};

// Concentration factors of the random-orientation Mori-Tanaka closed form.
// alpha/beta dimensionless, delta/eta in GPa.
struct MTIntermediates {
  double alpha_cn;
  double beta_cn;
  double delta_cn;
  double eta_cn;
};

// Plane-stress stiffness of an isotropic sheet: q11 = q22, q12 = nu*q11,
// q66 supplied separately as the effective shear modulus.
struct ReducedStiffness {
  double q11;
  double q12;
  double q22;
  double q66;

  ReducedStiffness(double q11_, double q12_, double q66_);
};

BulkShear to_bulk_shear(const IsotropicElastic& mat);

IsotropicElastic effective_E_nu(const BulkShear& kg);

// Effective (K, G) of a matrix reinforced by randomly oriented transversely
// isotropic inclusions, plus the concentration factors used.
std::pair<BulkShear, MTIntermediates> mori_tanaka_random(const CompositeSpec& spec);

ReducedStiffness reduced_stiffness(const IsotropicElastic& mat, double g);

// Hill constants of an inclusion elastically identical to an isotropic
// matrix with moduli (K, G); feeding these to mori_tanaka_random leaves
// the matrix constants unchanged for any volume fraction.
HillModuli matrix_equivalent_hill(const BulkShear& mat);

}  // namespace cntbuckle
