#include "asdc/smith.hpp"

#include <cstdlib>
#include <utility>

namespace asdc {

std::vector<mpz_class> SmithResult::torsion() const {
    std::vector<mpz_class> out;
    for (const mpz_class& d : divisors)
        if (d > 1) out.push_back(d);
    return out;
}

SmithResult smith_normal_form(std::vector<std::vector<mpz_class>> m) {
    SmithResult result;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    if (rows == 0 || cols == 0) return result;

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Find the entry of smallest absolute value in the remaining block.
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (!found || cmp(abs(m[i][j]), abs(m[pr][pc])) < 0) {
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[t], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            mpz_class q = m[i][t] / m[t][t];
            if (q != 0)
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            mpz_class q = m[t][j] / m[t][t];
            if (q != 0)
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // remainders left; repeat with a smaller pivot

        // Enforce divisibility of the remaining block by the pivot.
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows && divisible; ++i)
            for (std::size_t j = t + 1; j < cols && divisible; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    divisible = false;
                }
        if (!divisible) continue;

        ++t;
    }

    for (std::size_t i = 0; i < t; ++i) {
        mpz_class d = abs(m[i][i]);
        result.divisors.push_back(std::move(d));
    }
    result.rank = static_cast<int>(t);
    return result;
}

}  // namespace asdc
