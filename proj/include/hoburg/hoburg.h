/* hoburg: holistic finite-difference solver for Burgers' equation on a
 * bounded domain, with value (Dirichlet) and flux (Neumann) boundary
 * closures derived from centre manifold theory.
 *
 * C interface to the solver core.  All handles are opaque; every handle
 * returned by a hb_*_create / hb_signal_* call must be released with the
 * matching free function.  Functions returning hb_status report failure
 * details through hb_last_error().
 */
#ifndef HOBURG_H
#define HOBURG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hb_status {
  HB_OK = 0,
  HB_ERROR_INVALID_ARGUMENT = 1,
  HB_ERROR_BLOWUP = 2, /* non-finite values during time stepping */
  HB_ERROR_INTERNAL = 3
} hb_status;

typedef enum hb_bc_kind {
  /* prescribed value at the grid point one spacing outside the domain */
  HB_BC_DIRICHLET_GRIDPOINT = 0,
  /* prescribed flux at the midpoint half a spacing outside the domain */
  HB_BC_NEUMANN_MIDPOINT = 1
} hb_bc_kind;

typedef struct hb_signal hb_signal;
typedef struct hb_operator hb_operator;
typedef struct hb_trajectory hb_trajectory;

/* Message for the most recent failing call on this thread. */
const char* hb_last_error(void);

/* ---- boundary signals --------------------------------------------------
 * A signal supplies the boundary data a(t) and its rate da/dt.  Dirichlet
 * signals are boundary values; Neumann signals are the physical flux du/dx.
 * The operator scales Neumann signals by the grid spacing internally. */
hb_signal* hb_signal_constant(double value);
hb_signal* hb_signal_sine(double amplitude, double omega, double phase);
/* Data read off the exact travelling-kink solution at position x
 * (u_left > u_right). */
hb_signal* hb_signal_kink_value(double u_left, double u_right, double x_shock, double x);
hb_signal* hb_signal_kink_flux(double u_left, double u_right, double x_shock, double x);
hb_signal* hb_signal_callbacks(double (*value)(double t, void* ctx),
                               double (*rate)(double t, void* ctx), void* ctx);
void hb_signal_free(hb_signal* signal);

/* Coordinate of a domain boundary: side < 0 for the left end, > 0 for the
 * right end, given the coordinate x_origin of the first grid point. */
double hb_boundary_coordinate(hb_bc_kind kind, int side, int m, double h,
                              double x_origin);

/* ---- assembled operator ------------------------------------------------
 * m >= 7 grid points, spacing h > 0, truncation order 1..3, coupling gamma
 * in [0, 1] (1 is the physical discretisation). */
hb_status hb_operator_create(int m, double h, double x_origin, int order, double gamma,
                             hb_bc_kind left_kind, const hb_signal* left_signal,
                             hb_bc_kind right_kind, const hb_signal* right_signal,
                             hb_operator** out);
void hb_operator_free(hb_operator* op);
int hb_operator_size(const hb_operator* op);
hb_status hb_operator_rhs(const hb_operator* op, const double* u, int n, double t,
                          double* dudt);
/* Upper bound on the spectral radius of the dimensionless diffusion part. */
double hb_operator_spectral_bound(const hb_operator* op);
/* Reconstructed subgrid field of element j (1-based) at xi = (x - x_j)/h,
 * |xi| <= 3/2.  Inside the three elements nearest each boundary the interior
 * reconstruction is reused and the value is approximate. */
hb_status hb_operator_subgrid_sample(const hb_operator* op, const double* u, int n,
                                     int element, double xi, double* out_value);

/* ---- time integration --------------------------------------------------
 * Fixed-step RK4.  dt <= 0 selects the automatic step
 * safety * 2.785 * h^2 / spectral_bound, rounded down so an integer number
 * of steps reaches t1 exactly.  Every output_every-th state is captured;
 * the initial and final states always are. */
hb_status hb_integrate(const hb_operator* op, const double* u0, int n, double t0,
                       double t1, double dt, double safety, int output_every,
                       hb_trajectory** out);
int hb_trajectory_rows(const hb_trajectory* traj);
int hb_trajectory_size(const hb_trajectory* traj);
double hb_trajectory_time(const hb_trajectory* traj, int row);
hb_status hb_trajectory_state(const hb_trajectory* traj, int row, double* out, int n);
double hb_trajectory_dt(const hb_trajectory* traj);
/* 1 if the step size exceeded the stability bound. */
int hb_trajectory_stability_warning(const hb_trajectory* traj);
void hb_trajectory_free(hb_trajectory* traj);

/* ---- oracles and verification ------------------------------------------ */
/* Exact travelling viscous shock, u_left > u_right. */
double hb_kink_solution(double x, double t, double u_left, double u_right,
                        double x_shock);
/* Least-squares slope of log(error) vs log(h); n >= 3, h strictly
 * decreasing, errors positive. */
hb_status hb_fit_order(const double* hs, const double* errors, int n, double* slope);

/* Exact-rational structural identity suite at one truncation order.  The
 * report lists one PASS/FAIL line per identity plus the resolved forcing
 * sign convention; release it with hb_string_free. */
hb_status hb_verify_structural(int order, char** report, int* checks, int* failures);

/* Convergence study on the travelling-kink benchmark: one run per
 * (order, grid) cell, errors measured against the exact solution at t_end.
 * csv gets "p,m,h,err_global,err_interior" rows; summary a readable report
 * (blow-up cells are flagged there and excluded from fits).  Either output
 * pointer may be NULL; release results with hb_string_free. */
hb_status hb_convergence_study(hb_bc_kind bc, const int* orders, int n_orders,
                               const int* grids, int n_grids, double u_left,
                               double u_right, double x_shock, double x_left,
                               double length, double t_end, char** csv,
                               char** summary);
void hb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HOBURG_H */
