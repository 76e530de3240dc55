#include <array>
#include <cmath>

#include "closures.hpp"
#include "doctest.h"
#include "printed_reference.hpp"
#include "signals.hpp"

using namespace hoburg;
using R = Rational;

TEST_CASE("stored tables match the published coefficients entry for entry") {
  auto d = dirichlet_closure(TruncationOrder(3));
  auto n = neumann_midpoint_closure(TruncationOrder(3));
  CHECK(testref::compare_printed(d, testref::printed_dirichlet()) == "");
  CHECK(testref::compare_printed(n, testref::printed_neumann()) == "");

  // spot values
  CHECK(d.diffusion[2].rows[0] == std::vector<R>{-14, 14, -6, 1});
  CHECK(d.advection[1].rows[2] == std::vector<R>{-1, 2, 0, -2, 1});
  CHECK((*d.g_forms[1])[0][1] == R(-5));
  CHECK((*n.g_forms[0])[1][1] == R(-341, 60));
  CHECK(n.f_b[0][0] == R(-49, 48));
  CHECK(n.f_b[0][1] == R(637, 5760));

  // column sums at full coupling
  CHECK(d.f_d[0][0][0] + d.f_d[1][0][0] + d.f_d[2][0][0] == R(11, 9));
  CHECK(d.f_d[0][2][0] + d.f_d[1][2][0] + d.f_d[2][2][0] == R(1, 90));
  CHECK(d.f_d[0][0][1] + d.f_d[1][0][1] + d.f_d[2][0][1] ==
        -(R(1, 12) + R(1, 45) + R(1, 112)));
  CHECK(n.f_d[0][0][0] + n.f_d[1][0][0] + n.f_d[2][0][0] == R(-199, 180));
  CHECK(n.f_d[0][1][0] + n.f_d[1][1][0] + n.f_d[2][1][0] == R(7, 60));
  CHECK(n.f_d[0][2][0] + n.f_d[1][2][0] + n.f_d[2][2][0] == R(-1, 90));

  // interaction forms are symmetric; the shared one has vanishing row sums
  for (const auto& t : {d, n}) {
    for (const auto& g : t.g_forms) {
      REQUIRE(g);
      for (size_t i = 0; i < g->size(); ++i) {
        for (size_t j = 0; j < g->size(); ++j) CHECK((*g)[i][j] == (*g)[j][i]);
      }
    }
  }
  for (const auto& row : *d.g_forms[2]) {
    R sum = 0;
    for (const auto& v : row) sum += v;
    CHECK(sum.is_zero());
  }
  CHECK(d.g_forms[2].get() == n.g_forms[2].get());  // single stored instance
}

TEST_CASE("truncation drops the higher-order blocks") {
  auto p1 = dirichlet_closure(TruncationOrder(1));
  CHECK(p1.diffusion[1].rows[0].empty());
  CHECK(p1.diffusion[2].rows[0].empty());
  CHECK(p1.advection[1].rows[0].empty());
  CHECK_FALSE(p1.g_forms[0]);
  CHECK(p1.f_d[1][0][0].is_zero());
  CHECK(p1.f_c[1][0][0] == ForcingForm{});

  auto p2 = neumann_midpoint_closure(TruncationOrder(2));
  CHECK(p2.diffusion[2].rows[0].empty());
  CHECK_FALSE(p2.advection[1].rows[0].empty());
  CHECK(p2.g_forms[0] != nullptr);
}

TEST_CASE("boundary rates on reference states") {
  const double h = 1.0, g = 1.0, t = 0.0;
  std::array<double, 6> zero{};

  auto d1 = dirichlet_closure(TruncationOrder(1));
  auto rows = boundary_rhs(d1, constant_signal(1.0), zero, t, h, g);
  CHECK(rows[0] == 1.0);
  CHECK(rows[1] == 0.0);
  CHECK(rows[2] == 0.0);

  auto n1 = neumann_midpoint_closure(TruncationOrder(1));
  rows = boundary_rhs(n1, constant_signal(1.0), zero, t, h, g);
  CHECK(rows[0] == -1.0);
  CHECK(rows[1] == 0.0);
  CHECK(rows[2] == 0.0);

  std::array<double, 6> uniform;
  uniform.fill(0.8);
  rows = boundary_rhs(d1, constant_signal(0.8), uniform, t, h, g);
  for (double r : rows) CHECK(std::abs(r) <= 1e-16);

  std::array<double, 4> narrow{1, 2, 3, 4};
  CHECK_THROWS_AS(boundary_rhs(d1, constant_signal(0.0), narrow, t, h, g),
                  std::invalid_argument);
}

TEST_CASE("forcing sign convention is resolved to the ghost-consistent one") {
  CHECK(resolved_forcing_sign() == 1);
  CHECK(forcing_sign_description().find("+1/h") != std::string::npos);
}

TEST_CASE("mirroring is involutive and transforms the expected parts") {
  for (int p : {1, 2, 3}) {
    for (auto kind : {BoundaryKind::dirichlet_gridpoint, BoundaryKind::neumann_midpoint}) {
      auto t = kind == BoundaryKind::dirichlet_gridpoint
                   ? dirichlet_closure(TruncationOrder(p))
                   : neumann_midpoint_closure(TruncationOrder(p));
      auto m = mirror_closure(t);
      CHECK(m.side == Side::right);
      CHECK(mirror_closure(m) == t);

      // diffusion blocks are invariant, advection blocks flip sign
      CHECK(m.diffusion[0].rows == t.diffusion[0].rows);
      for (size_t c = 0; c < t.advection[0].rows[0].size(); ++c) {
        CHECK(m.advection[0].rows[0][c] == -t.advection[0].rows[0][c]);
      }
    }
  }
}

TEST_CASE("rate forcing can be switched off") {
  auto t = dirichlet_closure(TruncationOrder(3)).with_rate_forcing_zeroed();
  for (int k = 0; k < 3; ++k) {
    for (int r = 0; r < 3; ++r) CHECK(t.f_d[k][r][1].is_zero());
  }
  for (int k = 0; k < 2; ++k) {
    for (int r = 0; r < 3; ++r) CHECK(t.f_c[k][r][1] == ForcingForm{});
  }
  CHECK(t.f_b[0][1].is_zero());
  CHECK_FALSE(t.f_b[0][0].is_zero());  // value column untouched
}

TEST_CASE("consistency corrections change exactly the documented entries") {
  auto d = dirichlet_closure(TruncationOrder(3));
  auto dc = apply_consistency_corrections(d);
  CHECK(dc.consistency_corrected);
  CHECK(apply_consistency_corrections(dc) == dc);  // idempotent
  CHECK(dc.f_c[1][0][0].u1 == R(-4));
  CHECK(dc.f_c[1][0][0].a == R(3));
  auto d_rest = dc;
  d_rest.f_c[1][0][0] = d.f_c[1][0][0];
  d_rest.consistency_corrected = false;
  CHECK(d_rest == d);  // nothing else touched

  auto n = neumann_midpoint_closure(TruncationOrder(3));
  auto nc = apply_consistency_corrections(n);
  CHECK(nc.f_c[0][0][0].u1 == R(-1, 2));
  CHECK(nc.g_u1sq.is_zero());
  CHECK(nc.g_u2sq.is_zero());
  CHECK((*nc.g_forms[0])[0][0] == R(211, 60));
  CHECK((*nc.g_forms[1])[1][1] == R(4));
  CHECK(*nc.g_forms[2] == *n.g_forms[2]);  // shared form untouched
  CHECK(nc.diffusion == n.diffusion);
  CHECK(nc.advection == n.advection);
  CHECK(nc.f_d == n.f_d);
  CHECK(nc.f_b == n.f_b);

  CHECK_THROWS_AS(apply_consistency_corrections(mirror_closure(n)),
                  std::invalid_argument);
}
