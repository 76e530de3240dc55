#pragma once

#include <string>
#include <vector>

#include "closures.hpp"
#include "truncation.hpp"

namespace hoburg {

struct StructuralCheck {
  std::string name;
  bool pass = false;
};

/// Outcome of the exact-rational identity suite at one truncation order.
struct StructuralReport {
  int order_p = 1;
  int forcing_sign = 0;
  std::vector<StructuralCheck> checks;

  int failures() const;
  bool all_pass() const { return failures() == 0; }
  std::string to_text() const;
};

/// Runs every structural identity the closure tables must satisfy, for both
/// boundary kinds, in exact rational arithmetic (no tolerances): power
/// identities of the diffusion brackets, the symmetrised-product advection
/// identity, bracket symmetry, the per-row bandwidth audit, the
/// stabilisation bracket relation, ghost-point reductions at order 1, the
/// shared interaction form, and mirror involutivity.
StructuralReport verify_structural(TruncationOrder order);

/// Same suite on caller-supplied tables (both side == left); lets tests
/// verify that a tampered entry is caught.
StructuralReport verify_structural_tables(const ClosureTables& dirichlet_tables,
                                          const ClosureTables& neumann_tables,
                                          TruncationOrder order);

}  // namespace hoburg
