#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "assembly.hpp"
#include "integrate.hpp"
#include "kink.hpp"

namespace hoburg {

/// Problem statement for the independent reference solver.  Boundary data
/// are physical: a Dirichlet entry is the boundary value, a Neumann entry
/// the unscaled flux du/dx.
struct ReferenceProblem {
  int m = 7;
  double h = 1.0;
  double x_origin = 0.0;
  BoundaryKind left_kind = BoundaryKind::dirichlet_gridpoint;
  BoundaryKind right_kind = BoundaryKind::dirichlet_gridpoint;
  std::function<double(double)> initial;              // u(x) at t0
  std::function<double(double)> left_data, right_data;
  double t0 = 0.0;
  double t1 = 1.0;
};

/// Standard second-order central finite differences with conventional
/// ghost-point boundary handling, advanced by RK4 on a fine grid and
/// restricted to the coarse grid by injection.  h_fine must divide the
/// coarse spacing with an even ratio of at least 8 (even so that coarse
/// points land on fine nodes for midpoint boundaries); dt_fine <= 0 picks a
/// stable step automatically.
GridField reference_solve(const ReferenceProblem& prob, double h_fine, double dt_fine);

/// Least-squares slope of log(error) against log(h); needs at least three
/// strictly decreasing spacings and positive errors.
double fit_order(std::span<const double> hs, std::span<const double> errors);

/// Exact-solution benchmark for convergence studies: the travelling kink on
/// a fixed physical domain, boundary data read off the exact solution.  The
/// default shock position keeps the front away from both boundaries over
/// the default horizon.
struct StudyProblem {
  KinkParams kink{2.0, 0.0, 0.5};
  BoundaryKind bc = BoundaryKind::dirichlet_gridpoint;
  double x_left = -4.0;  // coordinate of the left physical boundary
  double length = 8.0;
  double t_end = 1.0;
  double gamma = 1.0;
};

/// Domain configuration for one study cell.  For a midpoint (Neumann)
/// boundary the stored signal is the scaled flux h * du/dx, so it is
/// rebuilt for every grid.
DomainConfig study_config(const StudyProblem& s, TruncationOrder order, int m);

/// Exact solution sampled on the study grid at time t.
GridField study_exact_field(const StudyProblem& s, int m, double t);

struct ConvergenceCell {
  int p = 0;
  int m = 0;
  double h = 0.0;
  double err_global = 0.0;
  double err_interior = 0.0;
  bool blowup = false;
};

struct OrderFit {
  int p = 0;
  bool valid = false;
  double global = 0.0;
  double interior = 0.0;
};

struct ConvergenceReport {
  std::string problem;
  std::vector<ConvergenceCell> cells;
  std::vector<OrderFit> fits;

  std::string to_csv() const;      // columns: p,m,h,err_global,err_interior
  std::string to_summary() const;  // human-readable, flags blow-ups
};

/// Runs one integration per (order, grid) cell at the automatic step size,
/// measures max-norm errors against the exact solution at t_end (globally
/// and over the interior rows 4..m-3), and fits orders per p when at least
/// three grids completed.
ConvergenceReport convergence_study(const StudyProblem& s, std::span<const int> orders,
                                    std::span<const int> grids);

}  // namespace hoburg
