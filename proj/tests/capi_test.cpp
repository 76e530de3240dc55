// Exercises the shared-library surface through the public C header only.
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "hoburg/hoburg.h"

namespace {

struct Operator {
  hb_operator* ptr = nullptr;
  ~Operator() { hb_operator_free(ptr); }
};

struct Trajectory {
  hb_trajectory* ptr = nullptr;
  ~Trajectory() { hb_trajectory_free(ptr); }
};

}  // namespace

TEST_CASE("operator lifecycle and validation") {
  hb_signal* zero = hb_signal_constant(0.0);
  REQUIRE(zero);

  Operator op;
  CHECK(hb_operator_create(9, 0.5, 0.0, 1, 1.0, HB_BC_DIRICHLET_GRIDPOINT, zero,
                           HB_BC_DIRICHLET_GRIDPOINT, zero, &op.ptr) == HB_OK);
  CHECK(hb_operator_size(op.ptr) == 9);
  CHECK(hb_operator_spectral_bound(op.ptr) > 0.0);

  std::vector<double> u(9, 0.0), rate(9, 1.0);
  CHECK(hb_operator_rhs(op.ptr, u.data(), 9, 0.0, rate.data()) == HB_OK);
  for (double r : rate) CHECK(r == 0.0);
  CHECK(hb_operator_rhs(op.ptr, u.data(), 5, 0.0, rate.data()) ==
        HB_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(hb_last_error()) > 0);

  hb_operator* bad = nullptr;
  CHECK(hb_operator_create(6, 0.5, 0.0, 1, 1.0, HB_BC_DIRICHLET_GRIDPOINT, zero,
                           HB_BC_DIRICHLET_GRIDPOINT, zero, &bad) ==
        HB_ERROR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(hb_operator_create(9, 0.5, 0.0, 4, 1.0, HB_BC_DIRICHLET_GRIDPOINT, zero,
                           HB_BC_DIRICHLET_GRIDPOINT, zero, &bad) ==
        HB_ERROR_INVALID_ARGUMENT);

  hb_signal_free(zero);
}

TEST_CASE("kink integration through the C surface") {
  const double uL = 2.0, uR = 0.0, x0 = 0.5;
  const int m = 31;
  const double h = 8.0 / (m + 1);
  const double x_origin = -4.0 + h;
  hb_signal* left = hb_signal_kink_value(uL, uR, x0, -4.0);
  hb_signal* right = hb_signal_kink_value(uL, uR, x0, 4.0);
  REQUIRE(left);
  REQUIRE(right);

  Operator op;
  REQUIRE(hb_operator_create(m, h, x_origin, 2, 1.0, HB_BC_DIRICHLET_GRIDPOINT, left,
                             HB_BC_DIRICHLET_GRIDPOINT, right, &op.ptr) == HB_OK);

  std::vector<double> u0(m);
  for (int j = 0; j < m; ++j) u0[j] = hb_kink_solution(x_origin + j * h, 0.0, uL, uR, x0);

  Trajectory traj;
  REQUIRE(hb_integrate(op.ptr, u0.data(), m, 0.0, 1.0, 0.0, 0.4, 1000000, &traj.ptr) ==
          HB_OK);
  CHECK(hb_trajectory_stability_warning(traj.ptr) == 0);
  CHECK(hb_trajectory_dt(traj.ptr) > 0.0);
  const int rows = hb_trajectory_rows(traj.ptr);
  REQUIRE(rows >= 2);
  CHECK(hb_trajectory_time(traj.ptr, 0) == 0.0);
  CHECK(hb_trajectory_time(traj.ptr, rows - 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hb_trajectory_size(traj.ptr) == m);

  std::vector<double> uT(m);
  REQUIRE(hb_trajectory_state(traj.ptr, rows - 1, uT.data(), m) == HB_OK);
  double err = 0.0;
  for (int j = 0; j < m; ++j) {
    err = std::max(err, std::abs(uT[j] - hb_kink_solution(x_origin + j * h, 1.0, uL, uR, x0)));
  }
  CHECK(err < 5e-3);

  CHECK(hb_trajectory_state(traj.ptr, rows, uT.data(), m) == HB_ERROR_INVALID_ARGUMENT);

  double v = 0.0;
  CHECK(hb_operator_subgrid_sample(op.ptr, uT.data(), m, 5, 0.0, &v) == HB_OK);
  CHECK(v == uT[4]);
  CHECK(hb_operator_subgrid_sample(op.ptr, uT.data(), m, 1, -0.5, &v) == HB_OK);
  CHECK(hb_operator_subgrid_sample(op.ptr, uT.data(), m, 0, 0.0, &v) ==
        HB_ERROR_INVALID_ARGUMENT);
  CHECK(hb_operator_subgrid_sample(op.ptr, uT.data(), m, 1, 2.0, &v) ==
        HB_ERROR_INVALID_ARGUMENT);

  hb_signal_free(left);
  hb_signal_free(right);
}

TEST_CASE("boundary coordinates") {
  CHECK(hb_boundary_coordinate(HB_BC_DIRICHLET_GRIDPOINT, -1, 9, 0.5, 0.0) == -0.5);
  CHECK(hb_boundary_coordinate(HB_BC_NEUMANN_MIDPOINT, -1, 9, 0.5, 0.0) == -0.25);
  CHECK(hb_boundary_coordinate(HB_BC_DIRICHLET_GRIDPOINT, +1, 9, 0.5, 0.0) == 4.5);
  CHECK(hb_boundary_coordinate(HB_BC_NEUMANN_MIDPOINT, +1, 9, 0.5, 0.0) == 4.25);
}

TEST_CASE("order fitting and structural verification through the C surface") {
  double hs[3] = {0.4, 0.2, 0.1};
  double errs[3] = {1e-2, 2.5e-3, 6.25e-4};
  double slope = 0.0;
  CHECK(hb_fit_order(hs, errs, 3, &slope) == HB_OK);
  CHECK(slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(hb_fit_order(hs, errs, 2, &slope) == HB_ERROR_INVALID_ARGUMENT);

  char* report = nullptr;
  int checks = 0, failures = -1;
  REQUIRE(hb_verify_structural(3, &report, &checks, &failures) == HB_OK);
  REQUIRE(report);
  CHECK(checks >= 20);
  CHECK(failures == 0);
  CHECK(std::string(report).find("forcing sign convention") != std::string::npos);
  hb_string_free(report);
  CHECK(hb_verify_structural(0, nullptr, &checks, &failures) ==
        HB_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("convergence study through the C surface") {
  int orders[1] = {1};
  int grids[3] = {8, 12, 16};
  char* csv = nullptr;
  char* summary = nullptr;
  REQUIRE(hb_convergence_study(HB_BC_DIRICHLET_GRIDPOINT, orders, 1, grids, 3, 2.0, 0.0,
                               0.5, -4.0, 8.0, 0.25, &csv, &summary) == HB_OK);
  REQUIRE(csv);
  REQUIRE(summary);
  CHECK(std::string(csv).find("p,m,h,err_global,err_interior") == 0);
  CHECK(std::string(summary).find("fitted order") != std::string::npos);
  hb_string_free(csv);
  hb_string_free(summary);
}

TEST_CASE("callback signals") {
  auto value = [](double t, void*) { return 0.1 * t; };
  auto rate = [](double, void*) { return 0.1; };
  hb_signal* sig = hb_signal_callbacks(value, rate, nullptr);
  REQUIRE(sig);
  hb_signal* zero = hb_signal_constant(0.0);
  Operator op;
  CHECK(hb_operator_create(9, 0.5, 0.0, 1, 1.0, HB_BC_DIRICHLET_GRIDPOINT, sig,
                           HB_BC_DIRICHLET_GRIDPOINT, zero, &op.ptr) == HB_OK);
  std::vector<double> u(9, 0.0), rate_out(9, 0.0);
  CHECK(hb_operator_rhs(op.ptr, u.data(), 9, 2.0, rate_out.data()) == HB_OK);
  CHECK(rate_out[0] != 0.0);  // boundary forcing active
  hb_signal_free(sig);
  hb_signal_free(zero);
  CHECK(hb_signal_callbacks(nullptr, rate, nullptr) == nullptr);
}
