#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "asdc/complex.hpp"

namespace asdc {

/// An n-tuple of exact positive rational bar lengths satisfying the polygon
/// inequality l_i < sum of the others (equivalently, every singleton set is
/// short).
class LengthVector {
  public:
    explicit LengthVector(std::vector<mpq_class> lengths);

    int size() const { return static_cast<int>(lengths_.size()); }
    const std::vector<mpq_class>& lengths() const { return lengths_; }
    const mpq_class& total() const { return total_; }

    /// Sum of the lengths indexed by `subset`.
    mpq_class subset_sum(Mask subset) const;

    friend bool operator==(const LengthVector& a, const LengthVector& b) {
        return a.lengths_ == b.lengths_;
    }

  private:
    std::vector<mpq_class> lengths_;
    mpq_class total_;
};

/// True iff no subset sums to exactly half the total, i.e. the vector lies in
/// an open chamber of the wall arrangement.
bool is_generic(const LengthVector& l);

/// The complex of all short sets (subset sum strictly below half the total).
/// Requires a generic vector; the result is always ASD.
SimplicialComplex short_complex(const LengthVector& l);

/// True iff both vectors produce the same short-set complex.
bool same_chamber(const LengthVector& a, const LengthVector& b);

/// Infeasibility certificate for a failed threshold realization: nonnegative
/// multipliers over the listed constraints whose combination has zero
/// coefficients and a positive right-hand side.
struct RealizeDiagnostics {
    std::vector<std::string> constraint_labels;
    std::vector<mpq_class> multipliers;
};

/// Searches for a generic length vector whose short-set complex equals K, by
/// exact-rational Fourier-Motzkin elimination over the open polyhedron cut
/// out by facet (short) and minimal-non-face (long) constraints.  Returns the
/// witness, or nullopt when the polyhedron is empty (filling `diagnostics`
/// with a certificate if given).  Requires an ASD complex; guarded to
/// n <= max_n.
std::optional<LengthVector> realize_threshold(const SimplicialComplex& k, int max_n = 8,
                                              RealizeDiagnostics* diagnostics = nullptr);

}  // namespace asdc
