#include "asdc/invariants.hpp"

#include <numeric>

#include "asdc/errors.hpp"

namespace asdc {

IntegerPolynomial::IntegerPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long IntegerPolynomial::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(d)];
}

long long IntegerPolynomial::evaluate(long long x) const {
    long long acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntegerPolynomial::pretty() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const long long c = coeffs_[d];
        if (c == 0) continue;
        if (!out.empty())
            out += c > 0 ? " + " : " - ";
        else if (c < 0)
            out += "-";
        const long long mag = c > 0 ? c : -c;
        if (d == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag);
            out += "q";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<long long> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t d = 0; d < c.size(); ++d)
        c[d] = a.coeff(static_cast<int>(d)) + b.coeff(static_cast<int>(d));
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<long long> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t d = 0; d < c.size(); ++d)
        c[d] = a.coeff(static_cast<int>(d)) - b.coeff(static_cast<int>(d));
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial poincare_polynomial(const SimplicialComplex& k) {
    if (!k.is_asd())
        throw Error(errc::not_asd, "the Poincare formula applies to ASD complexes");
    const int n = k.vertex_count();

    // Numerator (1+q)^(n-1) - sum_{I in K} q^|I|; the empty face contributes
    // the constant 1, which cancels the binomial constant term exactly.
    std::vector<long long> num(static_cast<std::size_t>(n), 0);
    long long binom = 1;
    for (int d = 0; d <= n - 1; ++d) {
        num[static_cast<std::size_t>(d)] = binom;
        binom = binom * (n - 1 - d) / (d + 1);
    }
    for (Mask f : k.faces()) num[static_cast<std::size_t>(subset_size(f))] -= 1;

    // Exact division by q, then by (q - 1).
    if (num[0] != 0) throw Defect("Poincare numerator has a constant term");
    num.erase(num.begin());
    std::vector<long long> quot(num.size() ? num.size() - 1 : 0, 0);
    long long carry = 0;
    for (std::size_t d = num.size(); d-- > 0;) {
        carry += num[d];
        if (d == 0) {
            if (carry != 0)
                throw Defect("Poincare numerator is not divisible by q-1 "
                             "(NonExactDivision: non-ASD input slipped through)");
        } else {
            quot[d - 1] = carry;
        }
    }
    return IntegerPolynomial(std::move(quot));
}

std::vector<long long> betti_numbers(const SimplicialComplex& k) {
    return poincare_polynomial(k).coeffs();
}

long long euler_characteristic(const SimplicialComplex& k) {
    return poincare_polynomial(k).evaluate(1);
}

}  // namespace asdc
