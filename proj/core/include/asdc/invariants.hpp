#pragma once

#include <string>
#include <vector>

#include "asdc/complex.hpp"

namespace asdc {

/// A polynomial in q with integer coefficients, index = degree, trailing
/// zeros trimmed.
class IntegerPolynomial {
  public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<long long> coeffs);

    const std::vector<long long>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    long long coeff(int d) const;
    long long evaluate(long long x) const;

    /// Ascending textual form, e.g. "1 + 5q + q^2".
    std::string pretty() const;

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;
    friend IntegerPolynomial operator+(const IntegerPolynomial&, const IntegerPolynomial&);
    friend IntegerPolynomial operator-(const IntegerPolynomial&, const IntegerPolynomial&);

  private:
    std::vector<long long> coeffs_;
};

/// Poincare polynomial of the compactification of an ASD complex:
/// ((1+q)^(n-1) - sum over faces I of q^|I|) / (q(q-1)), exactly.
IntegerPolynomial poincare_polynomial(const SimplicialComplex& k);

/// Even Betti numbers b_0, b_2, ..., b_{2(n-3)} (the polynomial coefficients).
std::vector<long long> betti_numbers(const SimplicialComplex& k);

long long euler_characteristic(const SimplicialComplex& k);

}  // namespace asdc
