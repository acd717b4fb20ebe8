#pragma once

#include <gmpxx.h>

#include <vector>

namespace asdc {

struct SmithResult {
    int rank = 0;
    /// Nonzero diagonal invariants d_1 | d_2 | ..., all positive.
    std::vector<mpz_class> divisors;

    /// Invariants greater than one, i.e. the torsion of the cokernel.
    std::vector<mpz_class> torsion() const;
};

/// Smith normal form of an integer matrix (rows x cols, any shape).
SmithResult smith_normal_form(std::vector<std::vector<mpz_class>> m);

}  // namespace asdc
