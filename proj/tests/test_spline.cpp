#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cntbuckle/spline.hpp"

using namespace cntbuckle;

namespace {

// Gauss-Legendre on [lo, hi], 4 points.
double gauss4(const std::function<double(double)>& f, double lo, double hi) {
  static const double xs[] = {-0.861136311594053, -0.339981043584856, 0.339981043584856,
                              0.861136311594053};
  static const double ws[] = {0.347854845137454, 0.652145154862546, 0.652145154862546,
                              0.347854845137454};
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double x = 0.5 * (lo + hi) + 0.5 * (hi - lo) * xs[i];
    acc += ws[i] * f(x);
  }
  return acc * 0.5 * (hi - lo);
}

// Exact integral of a polynomial given by samples: fit the degree-6
// interpolant through 7 points and integrate its coefficients.
double poly6_integral(const std::function<double(double)>& f, double lo, double hi) {
  const int n = 7;
  Eigen::MatrixXd V(n, n);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);  // map to [0, 1]
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
      V(i, j) = p;
      p *= t;
    }
    y(i) = f(lo + t * (hi - lo));
  }
  const Eigen::VectorXd c = V.fullPivLu().solve(y);
  double integral = 0.0;
  for (int j = 0; j < n; ++j) integral += c(j) / (j + 1);
  return integral * (hi - lo);
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(KnotGrid(1.0, 2), std::domain_error);
  CHECK_THROWS_AS(KnotGrid(0.0, 8), std::domain_error);
  const KnotGrid g(2.0, 8);
  CHECK(g.h() == doctest::Approx(0.25));
  CHECK(g.n_splines() == 11);
}

TEST_CASE("spline knot values") {
  const KnotGrid g(3.0, 12);
  const double h = g.h();
  for (int i : {-1, 0, 3, 7, 12, 13}) {
    const double yi = i * h;
    CHECK(eval_b3(g, i, yi) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(eval_b3(g, i, yi - h) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK(eval_b3(g, i, yi + h) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK(eval_b3(g, i, yi - 2.0 * h) == 0.0);
    CHECK(eval_b3(g, i, yi + 2.0 * h) == 0.0);

    CHECK(eval_b3(g, i, yi - h, 1) == doctest::Approx(0.5 / h).epsilon(1e-12));
    CHECK(eval_b3(g, i, yi, 1) == doctest::Approx(0.0));
    CHECK(eval_b3(g, i, yi + h, 1) == doctest::Approx(-0.5 / h).epsilon(1e-12));

    CHECK(eval_b3(g, i, yi, 2) == doctest::Approx(-2.0 / (h * h)).epsilon(1e-12));
    CHECK(eval_b3(g, i, yi - h, 2) == doctest::Approx(1.0 / (h * h)).epsilon(1e-12));
    CHECK(eval_b3(g, i, yi + h, 2) == doctest::Approx(1.0 / (h * h)).epsilon(1e-12));
  }
}

TEST_CASE("spline compact support") {
  const KnotGrid g(1.0, 5);
  const double h = g.h();
  for (int d = 0; d <= 2; ++d) {
    CHECK(eval_b3(g, 2, 2 * h - 2.0 * h - 1e-12, d) == 0.0);
    CHECK(eval_b3(g, 2, 2 * h + 2.0 * h + 1e-12, d) == 0.0);
    CHECK(eval_b3(g, 2, -10.0, d) == 0.0);
    CHECK(eval_b3(g, 2, 10.0, d) == 0.0);
  }
  CHECK_THROWS_AS(eval_b3(g, -2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(eval_b3(g, 7, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(eval_b3(g, 2, 0.1, 3), std::invalid_argument);
}

TEST_CASE("partition of unity and derivative sums") {
  const KnotGrid g(2.5, 10);
  for (int s = 0; s <= 200; ++s) {
    const double y = 2.5 * s / 200.0;
    double sum0 = 0.0;
    double sum1 = 0.0;
    double sum2 = 0.0;
    for (int i = -1; i <= g.m_sections + 1; ++i) {
      sum0 += eval_b3(g, i, y, 0);
      sum1 += eval_b3(g, i, y, 1);
      sum2 += eval_b3(g, i, y, 2);
    }
    CHECK(sum0 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(sum1) < 1e-12);
    CHECK(std::abs(sum2) < 1e-10);
  }
}

TEST_CASE("series reproduces constants and linears") {
  const KnotGrid g(2.0, 8);
  const int M = g.n_splines();
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(M);
  Eigen::VectorXd knots(M);
  for (int i = -1; i <= g.m_sections + 1; ++i) knots(i + 1) = i * g.h();

  for (int s = 0; s <= 100; ++s) {
    const double y = 2.0 * s / 100.0;
    CHECK(eval_series(g, ones, y) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(eval_series(g, ones, y, 1)) < 1e-12);
    CHECK(eval_series(g, knots, y) == doctest::Approx(y).epsilon(1e-12));
    CHECK(eval_series(g, knots, y, 1) == doctest::Approx(1.0).epsilon(1e-12));
  }

  Eigen::VectorXd unit = Eigen::VectorXd::Zero(M);
  unit(4) = 1.0;  // spline i = 3
  for (double y : {0.1, 0.77, 1.5}) {
    CHECK(eval_series(g, unit, y) == eval_b3(g, 3, y));
  }

  CHECK_THROWS_AS(eval_series(g, Eigen::VectorXd::Ones(M - 1), 0.5), std::invalid_argument);
}

TEST_CASE("spline is C2 across knots") {
  const KnotGrid g(1.7, 7);
  const double h = g.h();
  const int i = 3;
  for (int knot = i - 2; knot <= i + 2; ++knot) {
    const double yk = knot * h;
    for (int d = 0; d <= 2; ++d) {
      const double left = eval_b3(g, i, std::nextafter(yk, -1e9), d);
      const double right = eval_b3(g, i, std::nextafter(yk, 1e9), d);
      const double scale = std::max({1.0, std::abs(left), std::abs(right)});
      CHECK(std::abs(left - right) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("4-point Gauss integrates spline products exactly") {
  const KnotGrid g(2.0, 6);
  const double h = g.h();
  for (int i : {1, 2}) {
    for (int j : {1, 2, 3}) {
      for (int span = 0; span < g.m_sections; ++span) {
        const auto f = [&](double y) { return eval_b3(g, i, y) * eval_b3(g, j, y); };
        const double by_gauss = gauss4(f, span * h, (span + 1) * h);
        const double exact = poly6_integral(f, span * h, (span + 1) * h);
        CHECK(by_gauss == doctest::Approx(exact).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("Hermite end values") {
  const double b = 0.37;
  CHECK(eval_hermite(b, 1, 0.0) == doctest::Approx(1.0));
  CHECK(eval_hermite(b, 1, b) == doctest::Approx(0.0));
  CHECK(eval_hermite(b, 3, 0.0) == doctest::Approx(0.0));
  CHECK(eval_hermite(b, 3, b) == doctest::Approx(1.0));
  CHECK(eval_hermite(b, 2, 0.0) == doctest::Approx(0.0));
  CHECK(eval_hermite(b, 2, 0.0, 1) == doctest::Approx(1.0));
  CHECK(eval_hermite(b, 2, b) == doctest::Approx(0.0));
  CHECK(eval_hermite(b, 2, b, 1) == doctest::Approx(0.0));
  CHECK(eval_hermite(b, 4, 0.0) == doctest::Approx(0.0));
  CHECK(eval_hermite(b, 4, 0.0, 1) == doctest::Approx(0.0));
  CHECK(eval_hermite(b, 4, b) == doctest::Approx(0.0));
  CHECK(eval_hermite(b, 4, b, 1) == doctest::Approx(1.0));
  CHECK(eval_hermite(b, 1, 0.0, 1) == doctest::Approx(0.0));
  CHECK(eval_hermite(b, 3, b, 1) == doctest::Approx(0.0));
}

TEST_CASE("Hermite deflection pair sums to one") {
  const double b = 1.3;
  for (int s = 0; s <= 50; ++s) {
    const double x = b * s / 50.0;
    CHECK(eval_hermite(b, 1, x) + eval_hermite(b, 3, x) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(eval_hermite(b, 1, -0.01), std::domain_error);
  CHECK_THROWS_AS(eval_hermite(b, 1, b + 0.01), std::domain_error);
  CHECK_THROWS_AS(eval_hermite(b, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(eval_hermite(b, 5, 0.5), std::invalid_argument);
}

TEST_CASE("constraint transform spans the right subspace") {
  const KnotGrid g(2.0, 9);
  const int M = g.n_splines();

  const ConstraintTransform free2 =
      build_constraint_transform(g, EndCondition::Free, EndCondition::Free);
  CHECK(free2.T.rows() == M);
  CHECK(free2.T.cols() == M);
  CHECK((free2.T - Eigen::MatrixXd::Identity(M, M)).norm() == doctest::Approx(0.0));

  const ConstraintTransform sf =
      build_constraint_transform(g, EndCondition::Simple, EndCondition::Free);
  CHECK(sf.T.cols() == M - 1);
  for (int c = 0; c < sf.T.cols(); ++c) {
    const double w0 = sf.T(0, c) + 4.0 * sf.T(1, c) + sf.T(2, c);
    CHECK(std::abs(w0 / 6.0) < 1e-12);
  }

  const ConstraintTransform cc =
      build_constraint_transform(g, EndCondition::Clamped, EndCondition::Clamped);
  CHECK(cc.T.cols() == M - 4);
  for (int c = 0; c < cc.T.cols(); ++c) {
    const Eigen::VectorXd col = cc.T.col(c);
    CHECK(std::abs(eval_series(g, col, 0.0)) < 1e-12);
    CHECK(std::abs(eval_series(g, col, 0.0, 1)) < 1e-12);
    CHECK(std::abs(eval_series(g, col, g.length_a)) < 1e-12);
    CHECK(std::abs(eval_series(g, col, g.length_a, 1)) < 1e-12);
  }

  const ConstraintTransform sc =
      build_constraint_transform(g, EndCondition::Simple, EndCondition::Clamped);
  CHECK(sc.T.cols() == M - 3);
  // orthonormal columns imply full rank
  CHECK((sc.T.transpose() * sc.T - Eigen::MatrixXd::Identity(M - 3, M - 3)).norm() < 1e-12);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sc.T);
  CHECK(svd.singularValues().minCoeff() > 0.99);
}
