#include "asdc/intersection.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "asdc/chow.hpp"
#include "asdc/errors.hpp"

namespace asdc {

int PsiMonomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

long long* RecursionCache::find(const std::vector<Mask>& faces,
                                const std::vector<int>& exponents) {
    auto it = table_.find({faces, exponents});
    return it == table_.end() ? nullptr : &it->second;
}

void RecursionCache::store(std::vector<Mask> faces, std::vector<int> exponents,
                           long long value) {
    table_.emplace(std::make_pair(std::move(faces), std::move(exponents)), value);
}

namespace {

void check_monomial(const SimplicialComplex& k, const PsiMonomial& d) {
    const int n = k.vertex_count();
    if (static_cast<int>(d.exponents.size()) != n)
        throw Error(errc::degree_mismatch, "exponent vector has wrong arity");
    for (int e : d.exponents)
        if (e < 0) throw Error(errc::degree_mismatch, "exponents must be nonnegative");
    if (d.degree() != n - 3)
        throw Error(errc::degree_mismatch,
                    "exponents must sum to n-3 = " + std::to_string(n - 3));
}

// Contracts the pair {a,b} and transports the exponent vector: the merged
// slot receives d_a + d_b + merged_extra.
std::vector<int> contract_exponents(const std::vector<int>& d, int n, int a, int b,
                                    int merged_extra) {
    const std::vector<int> map = contraction_vertex_map(n, bit(a) | bit(b));
    std::vector<int> out(static_cast<std::size_t>(n - 1), 0);
    for (int v = 0; v < n; ++v)
        if (v != a && v != b) out[static_cast<std::size_t>(map[v])] = d[static_cast<std::size_t>(v)];
    out[static_cast<std::size_t>(map[a])] = d[static_cast<std::size_t>(a)] +
                                            d[static_cast<std::size_t>(b)] + merged_extra;
    return out;
}

long long recursion_impl(const SimplicialComplex& k, const std::vector<int>& d,
                         RecursionCache& cache, std::mt19937* rng) {
    const int n = k.vertex_count();
    if (n == 3) return 1;  // the unique ASD complex on three vertices is a point

    if (long long* hit = cache.find(k.faces(), d)) return *hit;

    int i = -1, j = -1, kk = -1;
    if (rng) {
        std::vector<int> positives, others;
        for (int v = 0; v < n; ++v) (d[static_cast<std::size_t>(v)] >= 1 ? positives : others)
                                        .push_back(v);
        i = positives[std::uniform_int_distribution<std::size_t>(0, positives.size() - 1)(*rng)];
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (v != i) rest.push_back(v);
        std::shuffle(rest.begin(), rest.end(), *rng);
        j = rest[0];
        kk = rest[1];
        if (j > kk) std::swap(j, kk);
    } else {
        for (int v = 0; v < n && i < 0; ++v)
            if (d[static_cast<std::size_t>(v)] >= 1) i = v;
        for (int v = 0; v < n; ++v) {
            if (v == i) continue;
            if (j < 0)
                j = v;
            else if (kk < 0) {
                kk = v;
                break;
            }
        }
    }

    auto term = [&](int a, int b, int extra_at_merge, int decrement_at) -> long long {
        const Mask pair = bit(a) | bit(b);
        if (!k.contains(pair)) return 0;  // ill-defined contraction
        std::vector<int> nd = contract_exponents(d, n, a, b, extra_at_merge);
        if (decrement_at >= 0) {
            const std::vector<int> map = contraction_vertex_map(n, pair);
            nd[static_cast<std::size_t>(map[decrement_at])] -= 1;
        }
        return recursion_impl(k.contract(pair), nd, cache, rng);
    };

    const long long value = term(i, j, -1, -1) + term(i, kk, -1, -1) + -term(j, kk, 0, i);
    cache.store(k.faces(), d, value);
    return value;
}

}  // namespace

long long intersection_recursion(const SimplicialComplex& k, const PsiMonomial& d) {
    RecursionCache cache;
    return intersection_recursion(k, d, cache);
}

long long intersection_recursion(const SimplicialComplex& k, const PsiMonomial& d,
                                 RecursionCache& cache, std::mt19937* rng) {
    if (!k.is_asd()) throw Error(errc::not_asd, "intersection numbers need an ASD complex");
    check_monomial(k, d);
    return recursion_impl(k, d.exponents, cache, rng);
}

long long intersection_formula(const SimplicialComplex& k, const PsiMonomial& d) {
    if (!k.is_asd()) throw Error(errc::not_asd, "intersection numbers need an ASD complex");
    check_monomial(k, d);
    const int n = k.vertex_count();

    // Renumber so the supported exponents occupy the first m slots.
    std::vector<int> support, rest;
    for (int v = 0; v < n; ++v)
        (d.exponents[static_cast<std::size_t>(v)] > 0 ? support : rest).push_back(v);
    const int m = static_cast<int>(support.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int t = 0; t < m; ++t) perm[static_cast<std::size_t>(support[t])] = t;
    for (std::size_t t = 0; t < rest.size(); ++t)
        perm[static_cast<std::size_t>(rest[t])] = m + static_cast<int>(t);
    const SimplicialComplex kk = k.relabel(perm);
    std::vector<int> dd(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t)
        dd[static_cast<std::size_t>(t)] = d.exponents[static_cast<std::size_t>(support[t])];

    // Signed count over partitions I | J of the first n-2 vertices with the
    // vertex at slot m forced into I and both halves faces of the complex.
    const Mask universe = full_mask(n - 2);
    const Mask forced = bit(m);
    const Mask last = bit(n - 1), second_last = bit(n - 2);
    long long total = 0;
    for (Mask i_part = 0; i_part <= universe; ++i_part) {
        if ((i_part & forced) == 0) continue;
        const Mask j_part = universe & ~i_part;
        if (!kk.contains(i_part) || !kk.contains(j_part)) continue;

        const bool plus = kk.contains(j_part | last) && kk.contains(j_part | second_last);
        const bool minus = kk.contains(i_part | last) && kk.contains(i_part | second_last);
        if (plus && minus)
            throw Defect("both sign conditions hold; complement pairing broke");
        if (!plus && !minus) continue;

        int parity = subset_size(j_part);
        for (int q = 0; q < m; ++q)
            if (contains_vertex(j_part, q)) parity += dd[static_cast<std::size_t>(q)];
        const long long sign = (parity % 2 == 0) ? 1 : -1;
        total += sign * (plus ? 1 : -1);
    }
    return total;
}

long long intersection_ring(const SimplicialComplex& k, const PsiMonomial& d) {
    if (!k.is_asd()) throw Error(errc::not_asd, "intersection numbers need an ASD complex");
    check_monomial(k, d);
    const int n = k.vertex_count();
    ChowClass product = unit_class(k);
    for (int i = 0; i < n; ++i) {
        if (d.exponents[static_cast<std::size_t>(i)] == 0) continue;
        int j = -1, kk = -1;
        for (int v = 0; v < n; ++v) {
            if (v == i) continue;
            if (j < 0)
                j = v;
            else if (kk < 0) {
                kk = v;
                break;
            }
        }
        const ChowClass psi = psi_class(k, i, j, kk);
        for (int rep = 0; rep < d.exponents[static_cast<std::size_t>(i)]; ++rep)
            product = multiply(product, psi);
    }
    return evaluate_top(product);
}

namespace {

void enumerate_compositions(int slots, int total, std::vector<int>& current,
                            const std::function<void(const std::vector<int>&)>& emit) {
    if (slots == 1) {
        current.push_back(total);
        emit(current);
        current.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        current.push_back(v);
        enumerate_compositions(slots - 1, total - v, current, emit);
        current.pop_back();
    }
}

}  // namespace

std::map<std::vector<int>, long long> intersection_table(const SimplicialComplex& k,
                                                         PsiMethod method, int max_n) {
    const int n = k.vertex_count();
    if (n > max_n)
        throw Error(errc::too_large, "table guarded to n <= " + std::to_string(max_n));
    if (!k.is_asd()) throw Error(errc::not_asd, "intersection numbers need an ASD complex");

    std::map<std::vector<int>, long long> table;
    RecursionCache cache;
    std::vector<int> current;
    enumerate_compositions(n, n - 3, current, [&](const std::vector<int>& d) {
        const PsiMonomial mono{d};
        long long value = 0;
        switch (method) {
            case PsiMethod::recursion: value = intersection_recursion(k, mono, cache); break;
            case PsiMethod::formula: value = intersection_formula(k, mono); break;
            case PsiMethod::ring: value = intersection_ring(k, mono); break;
        }
        table.emplace(d, value);
    });
    return table;
}

CrossCheckReport cross_check(const SimplicialComplex& k, int max_n) {
    const int n = k.vertex_count();
    if (n > max_n)
        throw Error(errc::too_large, "cross-check guarded to n <= " + std::to_string(max_n));
    if (!k.is_asd()) throw Error(errc::not_asd, "intersection numbers need an ASD complex");

    CrossCheckReport report;
    RecursionCache cache;
    std::vector<int> current;
    enumerate_compositions(n, n - 3, current, [&](const std::vector<int>& d) {
        const PsiMonomial mono{d};
        CrossCheckReport::Row row;
        row.exponents = d;
        row.recursion = intersection_recursion(k, mono, cache);
        row.formula = intersection_formula(k, mono);
        row.ring = intersection_ring(k, mono);
        ++report.monomials_checked;
        if (row.recursion != row.formula || row.formula != row.ring)
            report.disagreements.push_back(std::move(row));
    });
    return report;
}

}  // namespace asdc
