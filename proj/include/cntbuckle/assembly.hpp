#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cntbuckle/micromech.hpp"
#include "cntbuckle/spline.hpp"

namespace cntbuckle {

// Reference in-plane stress state, compression positive for sx0/sy0.
struct LoadState {
  double sx0;
  double sy0;
  double sxy0;

  LoadState(double sx0_, double sy0_, double sxy0_);
};

// Rectangular plate split into n_strips strips across the width (x), with a
// spline grid along the length (y). bc_code letters over {S, C, F}: position
// 1 is the loaded end y=0, position 2 the side edge x=0, position 3 the
// loaded end y=a, position 4 the side edge x=b.
struct PlateModel {
  double plate_width_b;
  double length_a;
  double thickness;
  ReducedStiffness q;
  int n_strips;
  KnotGrid grid;
  std::string bc_code;
  LoadState load;

  PlateModel(double length_a_, double plate_width_b_, double thickness_, ReducedStiffness q_,
             int n_strips_, int m_sections_, std::string bc_code_, LoadState load_);

  double strip_width() const { return plate_width_b / n_strips; }
};

// Global layout before constraints: nodal lines 0..n_strips, each carrying a
// deflection block (w) and a slope block (theta = dw/dx) of m_sections+3
// spline amplitudes.
struct DofMap {
  int n_strips;
  int m_sections;

  int block_size() const { return m_sections + 3; }
  int n_blocks() const { return 2 * (n_strips + 1); }
  int total() const { return n_blocks() * block_size(); }
  int index(int line, int block, int j) const {
    return (2 * line + block) * block_size() + j;
  }
};

// Constrained elastic and geometric stiffness, plus the bookkeeping needed
// to expand reduced vectors back to full spline amplitudes.
struct AssembledSystem {
  Eigen::MatrixXd K;
  Eigen::MatrixXd Kg;
  Eigen::MatrixXd Ty;            // end-condition transform, applied per block
  std::vector<int> kept_blocks;  // global block ids surviving edge elimination
  int n_strips = 0;
  int m_sections = 0;
  std::string bc_code;
  bool is_mechanism = false;     // K singular after constraints
};

Eigen::Matrix3d flexural_rigidity(const ReducedStiffness& q, double thickness);

// Rows: -d2/dx2, -d2/dy2, -2*d2/dxdy of every shape product, columns ordered
// [w_left, theta_left, w_right, theta_right] blocks of m+3 amplitudes each.
Eigen::MatrixXd bending_strain_matrix(double strip_width, const KnotGrid& grid, double x,
                                      double y);

// Rows: d/dx and d/dy of every shape product, same column ordering.
Eigen::MatrixXd geometric_strain_matrix(double strip_width, const KnotGrid& grid, double x,
                                        double y);

Eigen::MatrixXd strip_stiffness(double strip_width, const KnotGrid& grid,
                                const Eigen::Matrix3d& D, int n_gauss = 4);

Eigen::MatrixXd strip_geometric(double strip_width, const KnotGrid& grid,
                                const LoadState& load, double thickness, int n_gauss = 4);

AssembledSystem assemble_global(const PlateModel& model);

// Reduced-space vector back to the full amplitude vector (zeros on
// eliminated blocks).
Eigen::VectorXd expand_amplitudes(const AssembledSystem& sys, const Eigen::VectorXd& reduced);

// w (or a derivative) of the field described by a full amplitude vector.
double field_value(const PlateModel& model, const Eigen::VectorXd& full, double x, double y,
                   int dx = 0, int dy = 0);

}  // namespace cntbuckle
