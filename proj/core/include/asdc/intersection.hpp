#pragma once

#include <map>
#include <random>
#include <vector>

#include "asdc/complex.hpp"

namespace asdc {

/// Exponent vector d_1..d_n of a top psi-monomial; the degree sum must equal
/// n - 3 wherever an intersection number is requested.
struct PsiMonomial {
    std::vector<int> exponents;

    int degree() const;
    friend bool operator==(const PsiMonomial&, const PsiMonomial&) = default;
    friend auto operator<=>(const PsiMonomial& a, const PsiMonomial& b) {
        return a.exponents <=> b.exponents;
    }
};

/// Shared memo table for the contraction recursion, keyed by the canonical
/// face list plus exponent vector.  Reusable across monomials of one table.
class RecursionCache {
  public:
    long long* find(const std::vector<Mask>& faces, const std::vector<int>& exponents);
    void store(std::vector<Mask> faces, std::vector<int> exponents, long long value);

  private:
    std::map<std::pair<std::vector<Mask>, std::vector<int>>, long long> table_;
};

/// Intersection number by the contraction recursion
///   |d|_K = |..d_i+d_j-1..|_{K_(ij)} + |..d_i+d_k-1..|_{K_(ik)}
///           - |..d_i-1, d_j+d_k..|_{K_(jk)},
/// with terms over ill-defined contractions set to zero.  Deterministic
/// choices: i the smallest index with d_i >= 1, then the two smallest others.
/// Passing `rng` randomizes the choices instead (the value is invariant).
long long intersection_recursion(const SimplicialComplex& k, const PsiMonomial& d);
long long intersection_recursion(const SimplicialComplex& k, const PsiMonomial& d,
                                 RecursionCache& cache, std::mt19937* rng = nullptr);

/// Intersection number as a signed count of face partitions I | J of the
/// first n-2 vertices of the support-renumbered complex.
long long intersection_formula(const SimplicialComplex& k, const PsiMonomial& d);

/// Intersection number by expanding psi-classes in the Chow ring and
/// evaluating the top product.
long long intersection_ring(const SimplicialComplex& k, const PsiMonomial& d);

enum class PsiMethod { recursion, formula, ring };

/// All top monomials (compositions of n-3 into n parts) with their values.
std::map<std::vector<int>, long long> intersection_table(const SimplicialComplex& k,
                                                         PsiMethod method, int max_n = 9);

struct CrossCheckReport {
    struct Row {
        std::vector<int> exponents;
        long long recursion = 0;
        long long formula = 0;
        long long ring = 0;
    };
    int monomials_checked = 0;
    std::vector<Row> disagreements;

    bool ok() const { return disagreements.empty(); }
};

/// Runs all three methods on every top monomial and reports disagreements
/// (an empty report is the expected outcome).
CrossCheckReport cross_check(const SimplicialComplex& k, int max_n = 8);

}  // namespace asdc
