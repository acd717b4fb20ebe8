#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace asdc {

/// A system of linear inequalities  row . x >= rhs  over the rationals.
struct LinearSystem {
    int num_vars = 0;
    std::vector<std::vector<mpq_class>> rows;
    std::vector<mpq_class> rhs;
    std::vector<std::string> labels;

    void add(std::vector<mpq_class> row, mpq_class bound, std::string label);
};

struct FeasibilityResult {
    bool feasible = false;
    /// A point of the polyhedron (when feasible).
    std::vector<mpq_class> point;
    /// Farkas certificate (when infeasible): nonnegative multipliers over the
    /// original rows with sum(lambda_i * row_i) = 0 and sum(lambda_i * rhs_i) > 0.
    std::vector<mpq_class> farkas;
};

/// Exact Fourier-Motzkin feasibility test with witness back-substitution and
/// certificate tracking.  Intended for small systems (<= ~10 variables).
FeasibilityResult fourier_motzkin(const LinearSystem& system);

}  // namespace asdc
