#pragma once

#include <span>
#include <vector>

#include "banded_matrix.hpp"
#include "closures.hpp"
#include "grid_field.hpp"

namespace hoburg {

struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::dirichlet_gridpoint;
  BoundarySignal signal = zero_signal();
};

/// Discretisation of a bounded domain: m grid points with spacing h,
/// x_origin the coordinate of the first grid point.  A Dirichlet boundary
/// sits one spacing outside the nearest grid point, a Neumann boundary half
/// a spacing outside.  m >= 7 keeps the two 3-row closures disjoint.
struct DomainConfig {
  int m = 7;
  double h = 1.0;
  double x_origin = 0.0;
  BoundaryCondition left, right;
  TruncationOrder order = TruncationOrder(1);
  double gamma = 1.0;
};

double left_boundary_coordinate(BoundaryKind kind, double x_origin, double h);
double right_boundary_coordinate(BoundaryKind kind, double x_origin, double h, int m);

/// Full-domain bracket matrix at coupling order k: the left closure block,
/// the centred interior pattern, and the right closure block at the far
/// rows.  Exact rationals; these matrices carry the structural identities.
BandedMatrix<Rational> diffusion_bracket_matrix(const ClosureTables& left,
                                                const ClosureTables& right, int k, int m);
BandedMatrix<Rational> advection_bracket_matrix(const ClosureTables& left,
                                                const ClosureTables& right, int k, int m);
BandedMatrix<Rational> stabilisation_bracket_matrix(const ClosureTables& left,
                                                    const ClosureTables& right, int m);

/// The assembled evolution operator du/dt for the whole domain.  Immutable
/// after construction; rhs is pure, so one operator may be shared across
/// threads.
class HolisticOperator {
 public:
  explicit HolisticOperator(DomainConfig config);

  /// Build with caller-supplied coefficient tables (both given as left-side
  /// tables; the right one is mirrored internally).  Used to run closure
  /// variants such as a disabled adot channel.
  HolisticOperator(DomainConfig config, const ClosureTables& left_tables,
                   const ClosureTables& right_tables);

  std::vector<double> rhs(std::span<const double> u, double t) const;
  std::vector<double> rhs(const GridField& u, double t) const;

  /// Upper bound on the spectral radius of the dimensionless diffusion part
  /// (the scaled matrix times h^2): 50 power iterations from a fixed seed,
  /// inflated by 10%.
  double spectral_bound() const;

  const DomainConfig& config() const { return config_; }
  const BandedMatrix<double>& diffusion_matrix() const { return diffusion_scaled_; }
  const BandedMatrix<double>& advection_matrix() const { return advection_scaled_; }
  const ClosureTables& left_tables() const { return left_; }
  const ClosureTables& right_tables() const { return right_; }  // side == right

 private:
  void build_matrices();

  DomainConfig config_;
  ClosureTables left_, right_;
  BandedMatrix<double> diffusion_scaled_;   // includes the 1/h^2 factor
  BandedMatrix<double> advection_scaled_;   // includes the 1/h factor
  BandedMatrix<double> diffusion_dimensionless_;
};

inline HolisticOperator assemble(DomainConfig config) {
  return HolisticOperator(std::move(config));
}

}  // namespace hoburg
