#include <doctest.h>

#include <functional>
#include <random>

#include "asdc/errors.hpp"
#include "asdc/threshold.hpp"
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

}  // namespace

TEST_CASE("length vectors enforce positivity and the polygon inequality") {
    CHECK_NOTHROW(lv({1, 1, 1, mpq_class(1, 10)}));
    CHECK(has_error_code([] { lv({1, 1, 0}); }, errc::invalid_lengths));
    CHECK(has_error_code([] { lv({5, 1, 1}); }, errc::invalid_lengths));
    CHECK(has_error_code([] { lv({3, 1, 2}); }, errc::invalid_lengths));  // tie also fails
}

TEST_CASE("is_generic scans subset sums exactly") {
    CHECK(is_generic(lv({1, 1, 1, mpq_class(1, 10)})));
    CHECK_FALSE(is_generic(lv({1, 1, 1, 1})));  // {1,2} hits half the total
    CHECK(is_generic(lv({mpq_class(29, 10), 1, 1, 1})));
}

TEST_CASE("short_complex fixtures from the two quadrilateral chambers") {
    const auto star = short_complex(lv({1, 1, 1, mpq_class(1, 10)}));
    CHECK(star == star4());
    CHECK(star.faces() == brute_short_faces({1, 1, 1, mpq_class(1, 10)}));

    const auto tri = short_complex(lv({mpq_class(29, 10), 1, 1, 1}));
    CHECK(tri == tri4());
    CHECK(tri.faces() == brute_short_faces({mpq_class(29, 10), 1, 1, 1}));

    // Lengths (1,1,1,1,5/2): one heavy bar, pt-plus-boundary shape with the
    // lone point at the heavy bar.
    const auto heavy_last = short_complex(lv({1, 1, 1, 1, mpq_class(5, 2)}));
    CHECK(heavy_last == cx(5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {5}}));
    CHECK(canonical_under_relabeling(heavy_last) == canonical_under_relabeling(p5()));
    // With the heavy bar first it is exactly the p5 fixture.
    CHECK(short_complex(lv({mpq_class(5, 2), 1, 1, 1, 1})) == p5());

    CHECK(has_error_code([] { short_complex(lv({1, 1, 1, 1})); }, errc::not_generic));
}

TEST_CASE("short complexes are ASD and scale invariant") {
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const auto l = random_generic_lengths(rng, n);
        const auto k = short_complex(l);
        CHECK(k.is_asd());

        std::vector<mpq_class> scaled;
        const mpq_class factor(static_cast<long>(1 + rng() % 7), static_cast<long>(1 + rng() % 5));
        for (const auto& x : l.lengths()) scaled.push_back(x * factor);
        CHECK(short_complex(LengthVector(scaled)) == k);
    }
}

TEST_CASE("same_chamber compares short complexes") {
    const auto a = lv({1, 1, 1, mpq_class(1, 10)});
    const auto b = lv({1, 1, 1, mpq_class(1, 5)});
    const auto c = lv({mpq_class(29, 10), 1, 1, 1});
    CHECK(same_chamber(a, b));
    CHECK_FALSE(same_chamber(a, c));
    CHECK(same_chamber(a, a));
    CHECK(has_error_code([&] { same_chamber(a, lv({1, 1, 1})); }, errc::size_mismatch));
    CHECK(has_error_code([&] { same_chamber(a, lv({1, 1, 1, 1})); }, errc::not_generic));
}

TEST_CASE("realize_threshold round-trips on small complexes") {
    const auto tri = tri4();
    const auto witness = realize_threshold(tri);
    REQUIRE(witness.has_value());
    CHECK(short_complex(*witness) == tri);

    // The witness classifies all 2^n subsets correctly (brute recheck).
    CHECK(witness->lengths().size() == 4);
    CHECK(brute_short_faces(witness->lengths()) == tri.faces());

    CHECK(has_error_code([] { realize_threshold(cx(4, {{3, 4}})); }, errc::not_asd));
    CHECK(has_error_code([] { realize_threshold(pn_complex(9)); }, errc::too_large));
}

TEST_CASE("every ASD complex on five vertices is threshold") {
    for (const auto& k : enumerate_asd(5, EnumerationMode::labeled)) {
        const auto witness = realize_threshold(k);
        REQUIRE(witness.has_value());
        CHECK(short_complex(*witness) == k);
        CHECK(brute_short_faces(witness->lengths()) == k.faces());
    }
}

TEST_CASE("a six-vertex complex without a threshold realization") {
    const auto k = nonthreshold6();
    REQUIRE(k.is_asd());
    RealizeDiagnostics diag;
    const auto witness = realize_threshold(k, 8, &diag);
    CHECK_FALSE(witness.has_value());

    // The recorded certificate is a genuine contradiction: nonnegative
    // multipliers over the constraint list are returned and were verified
    // internally; spot-check shape here.
    CHECK(diag.multipliers.size() == diag.constraint_labels.size());
    bool any_positive = false;
    for (const auto& m : diag.multipliers) {
        CHECK(m >= 0);
        if (m > 0) any_positive = true;
    }
    CHECK(any_positive);
}

TEST_CASE("realized witnesses stay inside the polygon-space parameter cone") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        const auto k = random_asd(rng, 5);
        const auto witness = realize_threshold(k);
        REQUIRE(witness.has_value());
        // LengthVector construction re-validated positivity and the polygon
        // inequality; round-trip seals the chamber.
        CHECK(short_complex(*witness) == k);
    }
}
