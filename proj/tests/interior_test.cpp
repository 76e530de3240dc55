#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "interior.hpp"
#include "oracles.hpp"
#include "stencils.hpp"

using namespace hoburg;

namespace {

std::array<double, 7> window_of(double (*f)(double), double xc, double h) {
  std::array<double, 7> w;
  for (int j = 0; j < 7; ++j) w[j] = f(xc + (j - 3) * h);
  return w;
}

}  // namespace

TEST_CASE("interior rate on simple fields") {
  TruncationOrder p3(3);
  std::array<double, 7> constant;
  constant.fill(4.2);
  for (double g : {0.0, 0.3, 1.0}) {
    CHECK(interior_rhs(constant, 0.5, g, p3) == 0.0);
  }

  // affine field: only the first advection difference survives
  const double s = 0.7;
  std::array<double, 7> affine;
  for (int j = 0; j < 7; ++j) affine[j] = s * (j - 3) + 2.0;
  CHECK(interior_rhs(affine, 1.0, 1.0, p3) == doctest::Approx(-s * affine[3]).epsilon(1e-15));

  // u = x^2 centred at 0: all terms except the second difference vanish
  std::array<double, 7> parab{9, 4, 1, 0, 1, 4, 9};
  CHECK(interior_rhs(parab, 1.0, 1.0, p3) == 2.0);

  CHECK_THROWS_AS(interior_rhs(parab, 1.0, 1.5, p3), std::invalid_argument);
  CHECK_THROWS_AS(interior_rhs(parab, 1.0, -0.1, p3), std::invalid_argument);
  CHECK_THROWS_AS(interior_rhs(std::array<double, 5>{1, 2, 3, 4, 5}, 1.0, 1.0, p3),
                  std::invalid_argument);
  CHECK_THROWS_AS(TruncationOrder(0), std::invalid_argument);
  CHECK_THROWS_AS(TruncationOrder(4), std::invalid_argument);
}

TEST_CASE("interior rate is the printed polynomial in the coupling") {
  // coefficient extraction at four couplings must reproduce each term family
  std::array<double, 7> w;
  for (int j = 0; j < 7; ++j) w[j] = 0.4 + 0.3 * std::sin(1.1 * (j - 3) * 0.3 + 0.2);
  const double h = 0.3;
  std::span<const double> ws(w);
  const double uj = w[3];
  const double d2 = centred_difference(CentredOp::delta2, ws, 3);
  const double d4 = centred_difference(CentredOp::delta4, ws, 3);
  const double d6 = centred_difference(CentredOp::delta6, ws, 3);
  const double md = centred_difference(CentredOp::mu_delta, ws, 3);
  const double md3 = centred_difference(CentredOp::mu_delta3, ws, 3);

  const double t1 = d2 / (h * h) - uj * md / h + uj * uj * d2 / 12.0;
  const double t2 = -d4 / (12.0 * h * h) + uj * md3 / (6.0 * h) +
                    (d2 * md3 + d4 * md) / (24.0 * h);
  const double t3 = d6 / (90.0 * h * h);

  // solve the Vandermonde system for the three coupling coefficients
  const double gs[3] = {0.25, 0.5, 1.0};
  double rhs[3], m[3][3];
  for (int i = 0; i < 3; ++i) {
    rhs[i] = interior_rhs(w, h, gs[i], TruncationOrder(3));
    m[i][0] = gs[i];
    m[i][1] = gs[i] * gs[i];
    m[i][2] = gs[i] * gs[i] * gs[i];
  }
  for (int col = 0; col < 3; ++col) {
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      double f = m[row][col] / m[col][col];
      for (int j = col; j < 3; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  CHECK(rhs[0] / m[0][0] == doctest::Approx(t1).epsilon(1e-11));
  CHECK(rhs[1] / m[1][1] == doctest::Approx(t2).epsilon(1e-11));
  CHECK(rhs[2] / m[2][2] == doctest::Approx(t3).epsilon(1e-11));
}

TEST_CASE("interior consistency order against the continuum rate") {
  // residual vs u_xx - u u_x on a small sine field, fitted over halving h
  auto field = [](double x) { return 0.05 * std::sin(x); };
  const double xc = 0.3;
  const double exact = -0.05 * std::sin(xc) - field(xc) * 0.05 * std::cos(xc);

  for (int p : {1, 2}) {
    std::vector<double> hs{0.4, 0.2, 0.1, 0.05};
    std::vector<double> res;
    for (double h : hs) {
      auto w = window_of(+[](double x) { return 0.05 * std::sin(x); }, xc, h);
      res.push_back(std::abs(interior_rhs(w, h, 1.0, TruncationOrder(p)) - exact));
    }
    // keep points while successive residuals still shrink by at least 5x
    size_t keep = 2;
    while (keep < res.size() && res[keep - 1] / res[keep] >= 5.0) ++keep;
    double slope;
    if (keep >= 3) {
      slope = fit_order(std::span<const double>(hs.data(), keep),
                        std::span<const double>(res.data(), keep));
    } else {
      slope = std::log(res[0] / res[1]) / std::log(hs[0] / hs[1]);
    }
    if (p == 1) CHECK(slope >= 1.7);
    if (p == 2) CHECK(slope >= 3.6);
  }
}

TEST_CASE("subgrid reconstruction basics") {
  std::array<double, 5> w{1.3, 0.9, 1.7, 2.4, 0.2};
  for (double g : {0.0, 0.4, 1.0}) CHECK(subgrid_field(w, 0.0, 0.5, g) == w[2]);
  for (double xi : {-1.2, -0.5, 0.7, 1.5}) CHECK(subgrid_field(w, xi, 0.5, 0.0) == w[2]);

  // affine data: exact linear interpolation at full coupling
  const double s = 0.6, h = 0.25;
  std::array<double, 5> affine;
  for (int j = 0; j < 5; ++j) affine[j] = 1.1 + s * h * (j - 2);
  for (double xi : {-1.5, -0.75, -0.25, 0.0, 0.4, 1.0, 1.5}) {
    CHECK(subgrid_field(affine, xi, h, 1.0) ==
          doctest::Approx(affine[2] + xi * s * h).epsilon(1e-14));
  }

  CHECK_THROWS_AS(subgrid_field(w, 1.6, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(subgrid_field(std::array<double, 3>{1, 2, 3}, 0.0, 0.5, 1.0),
                  std::invalid_argument);
}

TEST_CASE("subgrid reconstruction interpolates the neighbouring grid values") {
  // At full coupling the reconstruction passes through u_{j-1}, u_j, u_{j+1}
  // exactly: every higher-order xi polynomial vanishes at xi = -1, 0, 1.
  std::array<double, 5> w{0.37, -1.2, 0.85, 2.1, -0.4};
  const double h = 0.3;
  CHECK(subgrid_field(w, 1.0, h, 1.0) == doctest::Approx(w[3]).epsilon(1e-15));
  CHECK(subgrid_field(w, -1.0, h, 1.0) == doctest::Approx(w[1]).epsilon(1e-15));
}

TEST_CASE("subgrid reconstruction satisfies the element edge conditions") {
  // The coupling conditions at the element edges are satisfied identically
  // by the reconstruction: delta_x v(x_{j +- 1/2}) equals the coupled grid
  // difference with no residual beyond roundoff, at every coupling.
  auto field = [](double x) { return 0.8 + 0.5 * std::sin(1.3 * x); };
  const double h = 0.4;
  std::array<double, 5> w;
  for (int j = 0; j < 5; ++j) w[j] = field((j - 2) * h);

  auto edge_residuals = [&](double g) {
    double right = (subgrid_field(w, 1.0, h, g) - subgrid_field(w, 0.0, h, g)) -
                   g * (w[3] - w[2]);
    double left = (subgrid_field(w, 0.0, h, g) - subgrid_field(w, -1.0, h, g)) -
                  g * (w[2] - w[1]);
    return std::max(std::abs(left), std::abs(right));
  };

  const double floor = 1e-14;
  for (double g : {1.0, 0.5, 0.2, 0.1}) CHECK(edge_residuals(g) <= floor);
  // halving the coupling keeps the residual within the quadratic bound
  CHECK(edge_residuals(0.1) <= std::max(edge_residuals(0.2) / 3.5, floor));
}

TEST_CASE("equivalent continuum rate") {
  DerivativeSet d{0.7, -0.3, 1.2, 0.4, -2.0, 0.9, 3.1};
  const double exact = d[2] - d[0] * d[1];
  CHECK(equivalent_pde_rhs(d, 1.0, 0.7) == exact);  // both brackets carry g(1-g)
  CHECK(equivalent_pde_rhs(d, 0.0, 0.7) == 0.0);

  DerivativeSet quartic{};
  quartic[4] = 24.0;
  CHECK(equivalent_pde_rhs(quartic, 0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
}
