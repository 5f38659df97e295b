#pragma once

#include <string>
#include <vector>

#include "rrm/analysis.hpp"

namespace rrm {

/// Reference 10-significant-digit eigenvalue tables used as regression
/// fixtures. Cells are decimal strings (exact once parsed); each row lists the
/// displayed non-null levels, nulls are implied by N - min(D, N).
struct ReferenceTable {
  ModelSpec model;
  unsigned n_min = 0, n_max = 0, levels = 0;
  std::vector<std::vector<const char*>> cells;  // rows, n_min..n_max
};

const ReferenceTable& reference_standard();          // 4 levels, N = 4..20
const ReferenceTable& reference_projected(unsigned d);  // d in {1,2,3}
const ReferenceTable& reference_weighted123();       // alphas (1,2,3), N = 4..14

/// All five fixtures in presentation order.
std::vector<const ReferenceTable*> all_reference_tables();

/// Cell-by-cell comparison: relative error must stay within 5e-9 (covers the
/// fixtures' final-digit rounding), and null counts must match exactly.
/// level == 0 flags a null-count mismatch for that row.
struct TableMismatch {
  unsigned basis_size = 0;
  unsigned level = 0;
  std::string expected;
  std::string got;
};
std::vector<TableMismatch> compare_to_reference(const ConvergenceTable& table,
                                                const ReferenceTable& ref,
                                                const PrecisionContext& ctx);

/// Builds the table for a fixture's own (model, range, levels) and compares.
std::vector<TableMismatch> run_reference_regression(const ReferenceTable& ref,
                                                    const PrecisionContext& ctx);

}  // namespace rrm
