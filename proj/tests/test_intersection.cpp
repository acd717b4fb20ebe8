#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "asdc/errors.hpp"
#include "asdc/intersection.hpp"
#include "helpers.hpp"

using namespace asdc;
using namespace asdc::testing;

namespace {

bool has_error_code(const std::function<void()>& fn, errc code) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

long long binomial(int n, int k) {
    long long b = 1;
    for (int t = 0; t < k; ++t) b = b * (n - t) / (t + 1);
    return b;
}

}  // namespace

TEST_CASE("base quadrilateral values by all three methods") {
    const auto star = star4();
    const auto tri = tri4();
    struct Case {
        const SimplicialComplex& k;
        std::vector<int> d;
        long long expected;
    };
    const Case cases[] = {
        {star, {1, 0, 0, 0}, 0},  {star, {0, 1, 0, 0}, 0}, {star, {0, 0, 1, 0}, 0},
        {star, {0, 0, 0, 1}, 2},  {tri, {1, 0, 0, 0}, -1}, {tri, {0, 1, 0, 0}, 1},
        {tri, {0, 0, 1, 0}, 1},   {tri, {0, 0, 0, 1}, 1},
    };
    for (const auto& c : cases) {
        CAPTURE(c.d);
        const PsiMonomial mono{c.d};
        CHECK(intersection_recursion(c.k, mono) == c.expected);
        CHECK(intersection_formula(c.k, mono) == c.expected);
        CHECK(intersection_ring(c.k, mono) == c.expected);
    }
}

TEST_CASE("five-point fixtures") {
    const auto p = p5();
    CHECK(intersection_recursion(p, PsiMonomial{{2, 0, 0, 0, 0}}) == 1);
    CHECK(intersection_formula(p, PsiMonomial{{2, 0, 0, 0, 0}}) == 1);
    CHECK(intersection_ring(p, PsiMonomial{{2, 0, 0, 0, 0}}) == 1);

    // psi_1 psi_2 on the same complex.
    CHECK(intersection_recursion(p, PsiMonomial{{1, 1, 0, 0, 0}}) == -1);
    CHECK(intersection_formula(p, PsiMonomial{{1, 1, 0, 0, 0}}) == -1);
    CHECK(intersection_ring(p, PsiMonomial{{1, 1, 0, 0, 0}}) == -1);

    // The degenerate three-point case is the single point.
    const auto k3 = cx(3, {});
    CHECK(intersection_recursion(k3, PsiMonomial{{0, 0, 0}}) == 1);
    CHECK(intersection_formula(k3, PsiMonomial{{0, 0, 0}}) == 1);
    CHECK(intersection_ring(k3, PsiMonomial{{0, 0, 0}}) == 1);
}

TEST_CASE("precondition errors") {
    CHECK(has_error_code([] { intersection_recursion(tri4(), PsiMonomial{{1, 1, 0, 0}}); },
                         errc::degree_mismatch));
    CHECK(has_error_code([] { intersection_formula(tri4(), PsiMonomial{{1, 0, 0}}); },
                         errc::degree_mismatch));
    CHECK(has_error_code([] { intersection_ring(cx(4, {{3, 4}}), PsiMonomial{{1, 0, 0, 0}}); },
                         errc::not_asd));
    CHECK(has_error_code([] { intersection_table(pn_complex(10), PsiMethod::recursion); },
                         errc::too_large));
}

TEST_CASE("recursion value is independent of the index choices") {
    std::mt19937 seeds(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5 + static_cast<int>(seeds() % 2);
        const auto k = random_asd(seeds, n);
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        for (int t = 0; t < n - 3; ++t) ++d[seeds() % static_cast<std::size_t>(n)];
        const PsiMonomial mono{d};
        const long long reference = intersection_recursion(k, mono);
        for (unsigned rep = 0; rep < 5; ++rep) {
            std::mt19937 rng(1000 * trial + rep);
            RecursionCache cache;
            CHECK(intersection_recursion(k, mono, cache, &rng) == reference);
        }
    }
}

TEST_CASE("relabeling equivariance of all three methods") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 2);
        const auto k = random_asd(rng, n);
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        for (int t = 0; t < n - 3; ++t) ++d[rng() % static_cast<std::size_t>(n)];

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto relabeled = k.relabel(perm);
        std::vector<int> dd(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            dd[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
                d[static_cast<std::size_t>(v)];

        const PsiMonomial mono{d}, mono2{dd};
        CHECK(intersection_recursion(k, mono) == intersection_recursion(relabeled, mono2));
        CHECK(intersection_formula(k, mono) == intersection_formula(relabeled, mono2));
        CHECK(intersection_ring(k, mono) == intersection_ring(relabeled, mono2));
    }
}

TEST_CASE("tables enumerate all compositions") {
    const auto star_table = intersection_table(star4(), PsiMethod::recursion);
    CHECK(star_table.size() == 4);
    CHECK(star_table.at({0, 0, 0, 1}) == 2);
    CHECK(star_table.at({1, 0, 0, 0}) == 0);
    CHECK(star_table.at({0, 1, 0, 0}) == 0);
    CHECK(star_table.at({0, 0, 1, 0}) == 0);

    const auto tri_table = intersection_table(tri4(), PsiMethod::formula);
    CHECK(tri_table.at({1, 0, 0, 0}) == -1);
    CHECK(tri_table.at({0, 1, 0, 0}) == 1);
    CHECK(tri_table.at({0, 0, 1, 0}) == 1);
    CHECK(tri_table.at({0, 0, 0, 1}) == 1);

    const auto p5_table = intersection_table(p5(), PsiMethod::ring);
    CHECK(p5_table.size() == static_cast<std::size_t>(binomial(2 * 5 - 4, 5 - 1)));
    const auto p6_table = intersection_table(pn_complex(6), PsiMethod::recursion);
    CHECK(p6_table.size() == static_cast<std::size_t>(binomial(2 * 6 - 4, 6 - 1)));
}

TEST_CASE("cross-check harness stays silent on verified families") {
    CHECK(cross_check(tri4()).ok());
    CHECK(cross_check(star4()).ok());
    const auto report = cross_check(p5());
    CHECK(report.ok());
    CHECK(report.monomials_checked == 15);

    // One non-threshold complex: the methods still agree.
    CHECK(cross_check(nonthreshold6()).ok());

    std::mt19937 rng(55);
    for (int trial = 0; trial < 6; ++trial) CHECK(cross_check(random_asd(rng, 5)).ok());
}
