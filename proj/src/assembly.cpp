#include "cntbuckle/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cntbuckle {

namespace {

// Gauss-Legendre rule on [0, 1], nodes by Newton iteration on P_n.
std::vector<std::pair<double, double>> gauss_rule(int n) {
  std::vector<std::pair<double, double>> pts(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    pts[i] = {0.5 * (x + 1.0), 0.5 * w};
  }
  return pts;
}

void check_gauss_order(int n_gauss) {
  if (n_gauss < 2 || n_gauss > 30) {
    throw std::invalid_argument("strip integration: unsupported Gauss order");
  }
}

EndCondition end_from_letter(char c) {
  switch (c) {
    case 'S': return EndCondition::Simple;
    case 'C': return EndCondition::Clamped;
    case 'F': return EndCondition::Free;
    default:
      throw std::invalid_argument(std::string("bc_code letter must be S, C or F, got '") + c +
                                  "'");
  }
}

}  // namespace

LoadState::LoadState(double sx0_, double sy0_, double sxy0_)
    : sx0(sx0_), sy0(sy0_), sxy0(sxy0_) {
  if (sx0 == 0.0 && sy0 == 0.0 && sxy0 == 0.0) {
    throw std::domain_error("LoadState: at least one stress component must be nonzero");
  }
}

PlateModel::PlateModel(double length_a_, double plate_width_b_, double thickness_,
                       ReducedStiffness q_, int n_strips_, int m_sections_,
                       std::string bc_code_, LoadState load_)
    : plate_width_b(plate_width_b_),
      length_a(length_a_),
      thickness(thickness_),
      q(q_),
      n_strips(n_strips_),
      grid(length_a_, m_sections_),
      bc_code(std::move(bc_code_)),
      load(load_) {
  if (!(plate_width_b > 0.0) || !(thickness > 0.0)) {
    throw std::domain_error("PlateModel: dimensions must be positive");
  }
  if (thickness / plate_width_b > 1.0 / 20.0 + 1e-12) {
    throw std::domain_error("PlateModel: thickness/plate_width_b must not exceed 1/20");
  }
  if (n_strips < 2) throw std::domain_error("PlateModel: n_strips must be at least 2");
  if (bc_code.size() != 4) {
    throw std::invalid_argument("PlateModel: bc_code must have exactly 4 letters");
  }
  for (char c : bc_code) end_from_letter(c);
}

Eigen::Matrix3d flexural_rigidity(const ReducedStiffness& q, double thickness) {
  if (!(thickness > 0.0)) throw std::domain_error("flexural_rigidity: thickness must be positive");
  const double f = thickness * thickness * thickness / 12.0;
  Eigen::Matrix3d D;
  D << f * q.q11, f * q.q12, 0.0,
       f * q.q12, f * q.q22, 0.0,
       0.0,       0.0,       f * q.q66;
  return D;
}

Eigen::MatrixXd bending_strain_matrix(double strip_width, const KnotGrid& grid, double x,
                                      double y) {
  const int M = grid.n_splines();
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(3, 4 * M);
  for (int blk = 0; blk < 4; ++blk) {
    const double N = eval_hermite(strip_width, blk + 1, x, 0);
    const double N1 = eval_hermite(strip_width, blk + 1, x, 1);
    const double N2 = eval_hermite(strip_width, blk + 1, x, 2);
    for (int i = -1; i <= grid.m_sections + 1; ++i) {
      const double P = eval_b3(grid, i, y, 0);
      const double P1 = eval_b3(grid, i, y, 1);
      const double P2 = eval_b3(grid, i, y, 2);
      const int c = blk * M + (i + 1);
      B(0, c) = -N2 * P;
      B(1, c) = -N * P2;
      B(2, c) = -2.0 * N1 * P1;
    }
  }
  return B;
}

Eigen::MatrixXd geometric_strain_matrix(double strip_width, const KnotGrid& grid, double x,
                                        double y) {
  const int M = grid.n_splines();
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(2, 4 * M);
  for (int blk = 0; blk < 4; ++blk) {
    const double N = eval_hermite(strip_width, blk + 1, x, 0);
    const double N1 = eval_hermite(strip_width, blk + 1, x, 1);
    for (int i = -1; i <= grid.m_sections + 1; ++i) {
      const double P = eval_b3(grid, i, y, 0);
      const double P1 = eval_b3(grid, i, y, 1);
      const int c = blk * M + (i + 1);
      B(0, c) = N1 * P;
      B(1, c) = N * P1;
    }
  }
  return B;
}

Eigen::MatrixXd strip_stiffness(double strip_width, const KnotGrid& grid,
                                const Eigen::Matrix3d& D, int n_gauss) {
  check_gauss_order(n_gauss);
  const int M = grid.n_splines();
  const auto rule = gauss_rule(n_gauss);
  const double h = grid.h();
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(4 * M, 4 * M);
  for (int span = 0; span < grid.m_sections; ++span) {
    for (const auto& [ty, wy] : rule) {
      const double y = (span + ty) * h;
      for (const auto& [tx, wx] : rule) {
        const double x = tx * strip_width;
        const Eigen::MatrixXd B = bending_strain_matrix(strip_width, grid, x, y);
        const double w = wy * h * wx * strip_width;
        k.noalias() += w * B.transpose() * D * B;
      }
    }
  }
  return 0.5 * (k + k.transpose().eval());
}

Eigen::MatrixXd strip_geometric(double strip_width, const KnotGrid& grid,
                                const LoadState& load, double thickness, int n_gauss) {
  check_gauss_order(n_gauss);
  const int M = grid.n_splines();
  const auto rule = gauss_rule(n_gauss);
  const double h = grid.h();
  Eigen::Matrix2d sig;
  sig << load.sx0, load.sxy0,
         load.sxy0, load.sy0;
  Eigen::MatrixXd kg = Eigen::MatrixXd::Zero(4 * M, 4 * M);
  for (int span = 0; span < grid.m_sections; ++span) {
    for (const auto& [ty, wy] : rule) {
      const double y = (span + ty) * h;
      for (const auto& [tx, wx] : rule) {
        const double x = tx * strip_width;
        const Eigen::MatrixXd B = geometric_strain_matrix(strip_width, grid, x, y);
        const double w = thickness * wy * h * wx * strip_width;
        kg.noalias() += w * B.transpose() * sig * B;
      }
    }
  }
  return 0.5 * (kg + kg.transpose().eval());
}

AssembledSystem assemble_global(const PlateModel& model) {
  const int M = model.grid.n_splines();
  const DofMap map{model.n_strips, model.grid.m_sections};
  const int N = map.total();

  const Eigen::Matrix3d D = flexural_rigidity(model.q, model.thickness);
  const Eigen::MatrixXd ks = strip_stiffness(model.strip_width(), model.grid, D);
  const Eigen::MatrixXd kgs =
      strip_geometric(model.strip_width(), model.grid, model.load, model.thickness);

  // All strips are identical; their [w_i, th_i, w_j, th_j] block ordering
  // lands contiguously in the global (2*line + block) layout.
  Eigen::MatrixXd K0 = Eigen::MatrixXd::Zero(N, N);
  Eigen::MatrixXd Kg0 = Eigen::MatrixXd::Zero(N, N);
  for (int s = 0; s < model.n_strips; ++s) {
    K0.block(2 * s * M, 2 * s * M, 4 * M, 4 * M) += ks;
    Kg0.block(2 * s * M, 2 * s * M, 4 * M, 4 * M) += kgs;
  }

  const ConstraintTransform ct = build_constraint_transform(
      model.grid, end_from_letter(model.bc_code[0]), end_from_letter(model.bc_code[2]));
  const Eigen::MatrixXd& Ty = ct.T;
  const int Mr = static_cast<int>(Ty.cols());

  std::vector<int> kept;
  const EndCondition side0 = end_from_letter(model.bc_code[1]);
  const EndCondition side1 = end_from_letter(model.bc_code[3]);
  for (int line = 0; line <= model.n_strips; ++line) {
    EndCondition side = EndCondition::Free;
    if (line == 0) side = side0;
    if (line == model.n_strips) side = side1;
    if (side == EndCondition::Free) {
      kept.push_back(2 * line);
      kept.push_back(2 * line + 1);
    } else if (side == EndCondition::Simple) {
      kept.push_back(2 * line + 1);  // deflection block eliminated, slope kept
    }
    // clamped eliminates both blocks
  }

  const int nk = static_cast<int>(kept.size());
  AssembledSystem sys;
  sys.K.resize(nk * Mr, nk * Mr);
  sys.Kg.resize(nk * Mr, nk * Mr);
  for (int p = 0; p < nk; ++p) {
    for (int q = 0; q < nk; ++q) {
      const auto kb = K0.block(kept[p] * M, kept[q] * M, M, M);
      const auto gb = Kg0.block(kept[p] * M, kept[q] * M, M, M);
      sys.K.block(p * Mr, q * Mr, Mr, Mr) = Ty.transpose() * kb * Ty;
      sys.Kg.block(p * Mr, q * Mr, Mr, Mr) = Ty.transpose() * gb * Ty;
    }
  }
  sys.K = 0.5 * (sys.K + sys.K.transpose().eval());
  sys.Kg = 0.5 * (sys.Kg + sys.Kg.transpose().eval());
  sys.Ty = Ty;
  sys.kept_blocks = std::move(kept);
  sys.n_strips = model.n_strips;
  sys.m_sections = model.grid.m_sections;
  sys.bc_code = model.bc_code;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.K, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  sys.is_mechanism = ev(0) <= 1e-10 * std::abs(ev(ev.size() - 1));
  return sys;
}

Eigen::VectorXd expand_amplitudes(const AssembledSystem& sys, const Eigen::VectorXd& reduced) {
  const int M = sys.m_sections + 3;
  const int Mr = static_cast<int>(sys.Ty.cols());
  const int nk = static_cast<int>(sys.kept_blocks.size());
  if (reduced.size() != nk * Mr) {
    throw std::invalid_argument("expand_amplitudes: reduced vector size mismatch");
  }
  Eigen::VectorXd full = Eigen::VectorXd::Zero(2 * (sys.n_strips + 1) * M);
  for (int p = 0; p < nk; ++p) {
    full.segment(sys.kept_blocks[p] * M, M) = sys.Ty * reduced.segment(p * Mr, Mr);
  }
  return full;
}

double field_value(const PlateModel& model, const Eigen::VectorXd& full, double x, double y,
                   int dx, int dy) {
  const int M = model.grid.n_splines();
  if (full.size() != 2 * (model.n_strips + 1) * M) {
    throw std::invalid_argument("field_value: amplitude vector size mismatch");
  }
  const double w = model.strip_width();
  int s = static_cast<int>(x / w);
  s = std::max(0, std::min(s, model.n_strips - 1));
  const double xi = x - s * w;
  double f = 0.0;
  for (int blk = 0; blk < 4; ++blk) {
    const Eigen::VectorXd amp = full.segment((2 * s + blk) * M, M);
    f += eval_hermite(w, blk + 1, xi, dx) * eval_series(model.grid, amp, y, dy);
  }
  return f;
}

}  // namespace cntbuckle
