#include "interior.hpp"

#include <cmath>
#include <stdexcept>

#include "stencils.hpp"

namespace hoburg {

namespace {

void check_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("coupling gamma must lie in [0, 1]");
  }
}

}  // namespace

double interior_rhs(std::span<const double> w, double h, double gamma,
                    TruncationOrder order) {
  check_gamma(gamma);
  if (w.size() != 7) throw std::invalid_argument("interior window must hold 7 values");
  if (h <= 0.0) throw std::invalid_argument("spacing must be positive");

  const int c = 3;
  const int p = order.p();
  const double uj = w[c];
  const double g2 = gamma * gamma;
  const double g3 = g2 * gamma;

  const double d2 = centred_difference(CentredOp::delta2, w, c);
  const double md = centred_difference(CentredOp::mu_delta, w, c);

  double diffusion = gamma * d2;
  double advection = gamma * md;
  double interaction = 0.0;
  if (p >= 2) {
    const double d4 = centred_difference(CentredOp::delta4, w, c);
    const double md3 = centred_difference(CentredOp::mu_delta3, w, c);
    diffusion -= (g2 / 12.0) * d4;
    advection -= (g2 / 6.0) * md3;
    interaction = (g2 / 24.0) * (d2 * md3 + d4 * md);
    if (p >= 3) diffusion += (g3 / 90.0) * centred_difference(CentredOp::delta6, w, c);
  }
  const double stabilisation = (gamma / 12.0) * uj * uj * d2;

  return diffusion / (h * h) - uj * advection / h + interaction / h + stabilisation;
}

double subgrid_field(std::span<const double> w, double xi, double h, double gamma) {
  if (!(std::abs(xi) <= 1.5)) throw std::invalid_argument("xi outside [-3/2, 3/2]");
  return subgrid_field_extended(w, xi, h, gamma);
}

double subgrid_field_extended(std::span<const double> w, double xi, double h,
                              double gamma) {
  check_gamma(gamma);
  if (w.size() != 5) throw std::invalid_argument("subgrid window must hold 5 values");
  if (h <= 0.0) throw std::invalid_argument("spacing must be positive");

  const int c = 2;
  const double uj = w[c];
  const double md = centred_difference(CentredOp::mu_delta, w, c);
  const double d2 = centred_difference(CentredOp::delta2, w, c);
  const double md3 = centred_difference(CentredOp::mu_delta3, w, c);
  const double d4 = centred_difference(CentredOp::delta4, w, c);

  const double xi2 = xi * xi;
  const double cubic = xi * xi2 - xi;         // xi^3 - xi
  const double quartic = xi2 * xi2 - xi2;     // xi^4 - xi^2

  return uj + gamma * (xi * md + 0.5 * xi2 * d2) +
         gamma * gamma * (cubic * md3 / 6.0 + quartic * d4 / 24.0) +
         gamma * h * (cubic / 6.0) * uj * d2;
}

double equivalent_pde_rhs(const DerivativeSet& d, double gamma, double h) {
  check_gamma(gamma);
  const double u = d[0], ux = d[1], uxx = d[2], uxxx = d[3], u4 = d[4], u5 = d[5],
               u6 = d[6];
  const double h2 = h * h;
  const double core = gamma * (-u * ux + uxx);
  const double damp = gamma * (1.0 - gamma);
  const double bracket2 = u4 - 2.0 * u * uxxx + u * u * uxx;
  const double bracket4 =
      2.0 * gamma *
          (-5.0 * ux * ux * uxx - 9.0 * u * uxx * uxx - 25.0 * u * ux * uxxx +
           15.0 * uxx * uxxx + 15.0 * ux * u4 - 2.0 * u * u * u4) +
      (1.0 - 4.0 * gamma) * (2.0 * u6 - 6.0 * u * u5 + 5.0 * u * u * u4);
  return core + (h2 / 12.0) * damp * bracket2 + (h2 * h2 / 720.0) * damp * bracket4;
}

}  // namespace hoburg
