#pragma once

#include <array>
#include <span>

#include "truncation.hpp"

namespace hoburg {

/// Interior evolution rate du_j/dt of the holistic discretisation of
/// Burgers' equation, evaluated from a 7-point window centred at j.
///
/// The retained term families, with gamma the inter-element coupling:
///   diffusion      (1/h^2) [ g d2 - (g^2/12) d4 + (g^3/90) d6 ] u
///   advection      -(1/h) u_j [ g md - (g^2/6) md3 ] u
///   interaction    (g^2/24h) ( d2 u * md3 u + d4 u * md u )
///   stabilisation  (g/12) u_j^2 d2 u
/// truncated according to `order` (see TruncationOrder).
double interior_rhs(std::span<const double> window7, double h, double gamma,
                    TruncationOrder order);

/// Reconstructed subgrid field inside element j at the dimensionless
/// coordinate xi = (x - x_j)/h, from a 5-point window centred at j.
/// |xi| <= 3/2 is accepted; the element proper is |xi| <= 1/2.
double subgrid_field(std::span<const double> window5, double xi, double h, double gamma);

/// subgrid_field without the xi range guard.  Boundary elements have no
/// reconstruction of their own; the sampler reuses the nearest full window
/// and evaluates it beyond the supported range, which is approximate.
double subgrid_field_extended(std::span<const double> window5, double xi, double h,
                              double gamma);

/// Field derivatives (u, u_x, ..., u_xxxxxx) at one point.
using DerivativeSet = std::array<double, 7>;

/// Continuum evolution rate equivalent to the discretisation as h -> 0,
/// through its h^4 correction.  Consistency oracle only; the solver never
/// calls this.
double equivalent_pde_rhs(const DerivativeSet& d, double gamma, double h);

}  // namespace hoburg
