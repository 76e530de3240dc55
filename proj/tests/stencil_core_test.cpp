#include <cmath>
#include <random>
#include <vector>

#include "banded_matrix.hpp"
#include "doctest.h"
#include "rational.hpp"
#include "stencils.hpp"

using namespace hoburg;
using R = Rational;

TEST_CASE("rational arithmetic is exact") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 30);
  for (int i = 0; i < 500; ++i) {
    R a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK(R(2, 4) == R(1, 2));
  CHECK(R(3, -6) == R(-1, 2));
  CHECK(R(-341, 60).den() == 60);
  CHECK_THROWS_AS(R(1, 0), std::invalid_argument);
}

TEST_CASE("centred differences match their defining weights") {
  std::vector<double> w{1, 2, 4};
  CHECK(centred_difference(CentredOp::delta2, std::span<const double>(w), 1) == 1.0);

  std::vector<double> cube{-8, -1, 0, 1, 8};  // x^3 at h = 1
  CHECK(centred_difference(CentredOp::mu_delta3, std::span<const double>(cube), 2) ==
        6.0);

  std::vector<double> quart{0, 1, 16, 81, 256};  // x^4 at h = 1
  CHECK(centred_difference(CentredOp::delta4, std::span<const double>(quart), 2) ==
        24.0);

  std::vector<double> affine{3, 5, 7};
  CHECK(centred_difference(CentredOp::delta2, std::span<const double>(affine), 1) ==
        0.0);

  CHECK_THROWS_AS(centred_difference(CentredOp::delta6, std::span<const double>(w), 1),
                  std::invalid_argument);
}

TEST_CASE("centred differences annihilate polynomials below their order") {
  // dyadic nodes and small integer coefficients keep all arithmetic exact
  const int order_of[] = {1, 2, 3, 4, 6};
  const CentredOp ops[] = {CentredOp::mu_delta, CentredOp::delta2, CentredOp::mu_delta3,
                           CentredOp::delta4, CentredOp::delta6};
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (double h : {0.25, 0.5, 1.0}) {
    for (int window = 7; window <= 9; ++window) {
      for (int op = 0; op < 5; ++op) {
        for (int deg = 0; deg < order_of[op]; ++deg) {
          std::vector<int> cs(deg + 1);
          for (auto& c : cs) c = coeff(rng);
          std::vector<double> w(window);
          for (int j = 0; j < window; ++j) {
            double x = -2.0 + j * h;
            double v = 0.0, p = 1.0;
            for (int k = 0; k <= deg; ++k, p *= x) v += cs[k] * p;
            w[j] = v;
          }
          int centre = window / 2;
          CHECK(centred_difference(ops[op], std::span<const double>(w), centre) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("band_from_rows extends boundary rows with the interior pattern") {
  std::vector<std::pair<int, R>> second_diff{{-1, 1}, {0, -2}, {1, 1}};
  std::vector<BandRowSpec<R>> rows{{0, {{0, -2}, {1, 1}}}};
  auto d = band_from_rows(rows, second_diff, 4);
  R expect[4][4] = {{-2, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, -2, 1}, {0, 0, 1, -2}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(d.at(i, j) == expect[i][j]);
  }

  std::vector<BandRowSpec<R>> flux_row{{0, {{0, -1}, {1, 1}}}};
  auto dn = band_from_rows(flux_row, second_diff, 3);
  R expect_n[3][3] = {{-1, 1, 0}, {1, -2, 1}, {0, 1, -2}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(dn.at(i, j) == expect_n[i][j]);
  }

  auto zero = band_from_rows<R>({}, {{0, R(0)}}, 2);
  CHECK(zero.tight_bandwidth() == std::pair<int, int>{0, 0});
  CHECK(zero.at(0, 0) == R(0));
  CHECK(zero.at(1, 1) == R(0));

  CHECK_THROWS_AS(band_from_rows<R>({{5, {{0, R(1)}}}}, second_diff, 4),
                  std::out_of_range);
  CHECK_THROWS_AS(band_from_rows<R>({{0, {{-1, R(1)}}}}, second_diff, 4),
                  std::out_of_range);
}

namespace {

BandedMatrix<R> closed_second_difference(int m, R corner) {
  std::vector<std::pair<int, R>> pattern{{-1, 1}, {0, -2}, {1, 1}};
  std::vector<BandRowSpec<R>> rows{{0, {{0, corner}, {1, 1}}},
                                   {m - 1, {{-1, 1}, {0, corner}}}};
  return band_from_rows(rows, pattern, m);
}

BandedMatrix<R> random_banded(std::mt19937& rng, int n, int lo, int up) {
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 9);
  BandedMatrix<R> a(n, n, lo, up);
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - lo); j <= std::min(n - 1, i + up); ++j) {
      a.set(i, j, R(num(rng), den(rng)));
    }
  }
  return a;
}

}  // namespace

TEST_CASE("band products reproduce the leading closed-operator power rows") {
  auto d = closed_second_difference(8, R(-2));
  auto d2 = d.multiply(d);
  CHECK(d2.at(0, 0) == R(5));
  CHECK(d2.at(0, 1) == R(-4));
  CHECK(d2.at(0, 2) == R(1));
  CHECK(d2.at(0, 3) == R(0));

  auto dn = closed_second_difference(8, R(-1));
  auto dn3 = dn.multiply(dn).multiply(dn);
  CHECK(dn3.at(0, 0) == R(-5));
  CHECK(dn3.at(0, 1) == R(9));
  CHECK(dn3.at(0, 2) == R(-5));
  CHECK(dn3.at(0, 3) == R(1));
  CHECK(dn3.at(0, 4) == R(0));

  auto id = BandedMatrix<R>::identity(8);
  CHECK(id.multiply(d) == d);
}

TEST_CASE("band multiplication agrees with the dense oracle") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> size(2, 12), band(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = size(rng);
    auto a = random_banded(rng, n, std::min(band(rng), n - 1), std::min(band(rng), n - 1));
    auto b = random_banded(rng, n, std::min(band(rng), n - 1), std::min(band(rng), n - 1));
    auto c = a.multiply(b);

    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        R dense;
        for (int k = 0; k < n; ++k) dense += a.at(i, k) * b.at(k, j);
        CHECK(c.at(i, j) == dense);
      }
    }
    auto [clo, cup] = c.tight_bandwidth();
    CHECK(clo <= a.lower_bandwidth() + b.lower_bandwidth());
    CHECK(cup <= a.upper_bandwidth() + b.upper_bandwidth());
  }

  BandedMatrix<R> a(3, 4, 1, 1), b(3, 3, 1, 1);
  CHECK_THROWS_AS(a.multiply(b), std::invalid_argument);
}

TEST_CASE("exchange flip reverses the index order") {
  auto d = closed_second_difference(6, R(-2));
  auto f = d.flipped();
  CHECK(f.at(5, 5) == R(-2));
  CHECK(f.at(5, 4) == R(1));
  CHECK(f == d);  // symmetric closure is flip invariant

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_banded(rng, 7, 2, 1);
    CHECK(a.flipped().flipped() == a);
  }
  auto sym = random_banded(rng, 6, 2, 2);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < i; ++j) sym.set(i, j, sym.at(j, i));
  }
  CHECK(sym.is_symmetric());
  CHECK(sym.flipped().is_symmetric());

  BandedMatrix<R> rect(3, 4, 1, 1);
  CHECK_THROWS_AS(rect.flipped(), std::invalid_argument);
}
