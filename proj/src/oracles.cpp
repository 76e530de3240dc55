#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hoburg {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_dirichlet(BoundaryKind k) { return k == BoundaryKind::dirichlet_gridpoint; }

}  // namespace

GridField reference_solve(const ReferenceProblem& prob, double h_fine, double dt_fine) {
  if (prob.m < 1 || prob.h <= 0.0 || h_fine <= 0.0) {
    throw std::invalid_argument("reference problem needs a valid grid");
  }
  if (!prob.initial || !prob.left_data || !prob.right_data) {
    throw std::invalid_argument("reference problem data not callable");
  }
  const double ratio = prob.h / h_fine;
  const long r = std::lround(ratio);
  if (std::abs(ratio - static_cast<double>(r)) > 1e-9 * ratio) {
    throw std::invalid_argument("fine spacing must divide the coarse spacing");
  }
  if (r < 8) throw std::invalid_argument("refinement must be at least 8x");
  if (r % 2 != 0) throw std::invalid_argument("refinement must be even");

  const double xl = left_boundary_coordinate(prob.left_kind, prob.x_origin, prob.h);
  const double xr =
      right_boundary_coordinate(prob.right_kind, prob.x_origin, prob.h, prob.m);
  const long cells = std::lround((xr - xl) / h_fine);
  const long n_nodes = cells + 1;
  const double hf = (xr - xl) / static_cast<double>(cells);
  const double hf2 = hf * hf;

  const bool dl = is_dirichlet(prob.left_kind);
  const bool dr = is_dirichlet(prob.right_kind);

  std::vector<double> u(static_cast<size_t>(n_nodes));
  for (long i = 0; i < n_nodes; ++i) u[i] = prob.initial(xl + i * hf);
  if (dl) u[0] = prob.left_data(prob.t0);
  if (dr) u[n_nodes - 1] = prob.right_data(prob.t0);

  auto rhs = [&](const std::vector<double>& w, double t, std::vector<double>& dw) {
    const double bl = prob.left_data(t);
    const double br = prob.right_data(t);
    const long last = n_nodes - 1;
    for (long i = 1; i < last; ++i) {
      double um = w[i - 1], uc = w[i], up = w[i + 1];
      if (i == 1 && dl) um = bl;
      if (i == last - 1 && dr) up = br;
      dw[i] = (up - 2.0 * uc + um) / hf2 - uc * (up - um) / (2.0 * hf);
    }
    if (dl) {
      dw[0] = 0.0;
    } else {
      const double ghost = w[1] - 2.0 * hf * bl;
      dw[0] = (w[1] - 2.0 * w[0] + ghost) / hf2 - w[0] * (w[1] - ghost) / (2.0 * hf);
    }
    if (dr) {
      dw[last] = 0.0;
    } else {
      const double ghost = w[last - 1] + 2.0 * hf * br;
      dw[last] =
          (ghost - 2.0 * w[last] + w[last - 1]) / hf2 -
          w[last] * (ghost - w[last - 1]) / (2.0 * hf);
    }
  };

  const double span = prob.t1 - prob.t0;
  if (span > 0.0) {
    double dt = dt_fine > 0.0 ? dt_fine : 0.4 * kRk4StabilityConstant * hf2 / 4.0;
    const long n = std::max(1L, static_cast<long>(std::ceil(span / dt * (1.0 - 1e-12))));
    dt = span / static_cast<double>(n);

    std::vector<double> k1(u.size()), k2(u.size()), k3(u.size()), k4(u.size()),
        stage(u.size());
    for (long k = 0; k < n; ++k) {
      const double t = prob.t0 + k * dt;
      if (dl) u[0] = prob.left_data(t);
      if (dr) u[n_nodes - 1] = prob.right_data(t);
      rhs(u, t, k1);
      for (size_t i = 0; i < u.size(); ++i) stage[i] = u[i] + 0.5 * dt * k1[i];
      rhs(stage, t + 0.5 * dt, k2);
      for (size_t i = 0; i < u.size(); ++i) stage[i] = u[i] + 0.5 * dt * k2[i];
      rhs(stage, t + 0.5 * dt, k3);
      for (size_t i = 0; i < u.size(); ++i) stage[i] = u[i] + dt * k3[i];
      rhs(stage, t + dt, k4);
      bool finite = true;
      for (size_t i = 0; i < u.size(); ++i) {
        u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        finite = finite && std::isfinite(u[i]);
      }
      if (!finite) throw BlowupError(k + 1, t + dt);
      const double t_next = prob.t0 + (k + 1) * dt;
      if (dl) u[0] = prob.left_data(t_next);
      if (dr) u[n_nodes - 1] = prob.right_data(t_next);
    }
  }

  std::vector<double> coarse(static_cast<size_t>(prob.m));
  for (int j = 0; j < prob.m; ++j) {
    const double xj = prob.x_origin + j * prob.h;
    const long idx = std::lround((xj - xl) / hf);
    coarse[j] = u[idx];
  }
  return GridField(std::move(coarse), prob.h, prob.x_origin);
}

double fit_order(std::span<const double> hs, std::span<const double> errors) {
  if (hs.size() != errors.size()) throw std::invalid_argument("mismatched fit inputs");
  if (hs.size() < 3) throw std::invalid_argument("order fit needs at least 3 grids");
  for (size_t i = 0; i < hs.size(); ++i) {
    if (hs[i] <= 0.0) throw std::invalid_argument("spacings must be positive");
    if (i > 0 && hs[i] >= hs[i - 1]) {
      throw std::invalid_argument("spacings must be strictly decreasing");
    }
    if (errors[i] <= 0.0) throw std::invalid_argument("errors must be positive");
  }
  const size_t n = hs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double x = std::log(hs[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DomainConfig study_config(const StudyProblem& s, TruncationOrder order, int m) {
  const bool d = is_dirichlet(s.bc);
  const double h = d ? s.length / (m + 1) : s.length / m;
  const double x_origin = d ? s.x_left + h : s.x_left + 0.5 * h;
  const double xr = s.x_left + s.length;

  BoundarySignal left =
      d ? kink_value_signal(s.kink, s.x_left)
        : scaled_signal(kink_flux_signal(s.kink, s.x_left), h);
  BoundarySignal right = d ? kink_value_signal(s.kink, xr)
                           : scaled_signal(kink_flux_signal(s.kink, xr), h);

  DomainConfig cfg;
  cfg.m = m;
  cfg.h = h;
  cfg.x_origin = x_origin;
  cfg.left = {s.bc, std::move(left)};
  cfg.right = {s.bc, std::move(right)};
  cfg.order = order;
  cfg.gamma = s.gamma;
  return cfg;
}

GridField study_exact_field(const StudyProblem& s, int m, double t) {
  const bool d = is_dirichlet(s.bc);
  const double h = d ? s.length / (m + 1) : s.length / m;
  const double x_origin = d ? s.x_left + h : s.x_left + 0.5 * h;
  std::vector<double> v(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) v[j] = kink_solution(x_origin + j * h, t, s.kink);
  return GridField(std::move(v), h, x_origin);
}

ConvergenceReport convergence_study(const StudyProblem& s, std::span<const int> orders,
                                    std::span<const int> grids) {
  ConvergenceReport report;
  report.problem = "kink/" + std::string(is_dirichlet(s.bc) ? "dirichlet" : "neumann");

  for (int p : orders) {
    TruncationOrder order(p);
    for (int m : grids) {
      if (m < 7) throw std::invalid_argument("study grids need m >= 7");
      ConvergenceCell cell;
      cell.p = p;
      cell.m = m;
      DomainConfig cfg = study_config(s, order, m);
      cell.h = cfg.h;
      try {
        HolisticOperator op(cfg);
        GridField u0 = study_exact_field(s, m, 0.0);
        IntegratorConfig ic;
        ic.t0 = 0.0;
        ic.t1 = s.t_end;
        ic.output_every = std::numeric_limits<int>::max();
        Trajectory traj = integrate(op, u0, ic);
        const std::vector<double>& uT = traj.states.back();
        GridField exact = study_exact_field(s, m, s.t_end);
        double eg = 0.0, ei = 0.0;
        for (int j = 0; j < m; ++j) {
          const double e = std::abs(uT[j] - exact.values[j]);
          eg = std::max(eg, e);
          if (j >= 3 && j <= m - 4) ei = std::max(ei, e);
        }
        cell.err_global = eg;
        cell.err_interior = ei;
      } catch (const BlowupError&) {
        cell.blowup = true;
      }
      report.cells.push_back(cell);
    }

    OrderFit fit;
    fit.p = p;
    std::vector<const ConvergenceCell*> done;
    for (const auto& c : report.cells) {
      if (c.p == p && !c.blowup) done.push_back(&c);
    }
    std::sort(done.begin(), done.end(),
              [](const ConvergenceCell* a, const ConvergenceCell* b) { return a->h > b->h; });
    std::vector<double> hs, eg, ei;
    for (const auto* c : done) {
      hs.push_back(c->h);
      eg.push_back(c->err_global);
      ei.push_back(c->err_interior);
    }
    if (hs.size() >= 3) {
      fit.valid = true;
      fit.global = fit_order(hs, eg);
      fit.interior = fit_order(hs, ei);
    }
    report.fits.push_back(fit);
  }
  return report;
}

std::string ConvergenceReport::to_csv() const {
  std::string out = "p,m,h,err_global,err_interior\n";
  for (const auto& c : cells) {
    if (c.blowup) continue;
    out += std::to_string(c.p) + "," + std::to_string(c.m) + "," + g17(c.h) + "," +
           g17(c.err_global) + "," + g17(c.err_interior) + "\n";
  }
  return out;
}

std::string ConvergenceReport::to_summary() const {
  std::string out = "convergence study: " + problem + "\n";
  for (const auto& c : cells) {
    out += "  p=" + std::to_string(c.p) + " m=" + std::to_string(c.m) +
           " h=" + g17(c.h);
    if (c.blowup) {
      out += "  BLOWUP (excluded from fit)\n";
    } else {
      out += "  err_global=" + g17(c.err_global) +
             "  err_interior=" + g17(c.err_interior) + "\n";
    }
  }
  for (const auto& f : fits) {
    if (f.valid) {
      out += "  fitted order p=" + std::to_string(f.p) + ": global " + g17(f.global) +
             ", interior " + g17(f.interior) + "\n";
    } else {
      out += "  fitted order p=" + std::to_string(f.p) +
             ": not fitted (needs 3 completed grids)\n";
    }
  }
  return out;
}

}  // namespace hoburg
