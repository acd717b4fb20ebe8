#pragma once

// Shared fixtures, brute-force oracles, and random generators for the test
// suites.  Oracles here re-derive expected values straight from definitions
// and stay independent of the library's optimized paths.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "asdc/complex.hpp"
#include "asdc/threshold.hpp"

namespace asdc::testing {

/// Mask from 1-based vertex labels.
inline Mask m1(std::initializer_list<int> verts) {
    Mask m = 0;
    for (int v : verts) m |= bit(v - 1);
    return m;
}

/// Complex from 1-based facet lists.
inline SimplicialComplex cx(int n, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<Mask> masks;
    for (const auto& f : facets) masks.push_back(m1(f));
    return SimplicialComplex::from_facets(n, masks);
}

inline LengthVector lv(std::initializer_list<mpq_class> lengths) {
    return LengthVector(std::vector<mpq_class>(lengths));
}

// The two four-point chambers: a star of pairs through vertex 4 (lengths
// 1,1,1,1/10) and a triangle avoiding vertex 1 (lengths 29/10,1,1,1).
inline SimplicialComplex star4() { return cx(4, {{1, 4}, {2, 4}, {3, 4}}); }
inline SimplicialComplex tri4() { return cx(4, {{2, 3}, {2, 4}, {3, 4}}); }
inline SimplicialComplex p5() { return cx(5, {{2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}}); }

/// An n=6 ASD complex with no threshold realization, found by sweeping the
/// full enumeration through the LP and frozen here.
inline SimplicialComplex nonthreshold6() {
    return cx(6, {{1, 2, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}, {2, 3, 6}, {1, 4, 6}});
}

/// Oracle: Alexander dual by definition, one complement lookup per subset.
inline std::vector<Mask> brute_dual_faces(const SimplicialComplex& k) {
    const int n = k.vertex_count();
    std::vector<Mask> out;
    for (Mask a = 0; a <= full_mask(n); ++a)
        if (!k.contains(complement(a, n))) out.push_back(a);
    return out;
}

/// Oracle: the exactly-one / at-most-one scans over all complementary pairs.
inline bool brute_is_asd(const SimplicialComplex& k) {
    const int n = k.vertex_count();
    for (Mask a = 0; a <= full_mask(n); ++a)
        if (k.contains(a) + k.contains(complement(a, n)) != 1) return false;
    return true;
}

inline bool brute_is_pre_asd(const SimplicialComplex& k) {
    const int n = k.vertex_count();
    for (Mask a = 0; a <= full_mask(n); ++a)
        if (k.contains(a) && k.contains(complement(a, n))) return false;
    return true;
}

/// Oracle: short sets by direct subset-sum comparison.
inline std::vector<Mask> brute_short_faces(const std::vector<mpq_class>& lengths) {
    const int n = static_cast<int>(lengths.size());
    mpq_class total = 0;
    for (const auto& l : lengths) total += l;
    std::vector<Mask> out;
    for (Mask a = 0; a <= full_mask(n); ++a) {
        mpq_class sum = 0;
        for (int v : mask_vertices(a)) sum += lengths[static_cast<std::size_t>(v)];
        if (2 * sum < total) out.push_back(a);
    }
    return out;
}

/// Oracle: every labeled ASD complex on n <= 5 vertices by trying all ways of
/// picking one member from each complementary pair of subsets and keeping the
/// hereditary ones.
inline std::vector<SimplicialComplex> brute_enumerate_asd(int n) {
    const Mask full = full_mask(n);
    std::vector<Mask> free_reps;  // pairs not forced by the singleton rule
    for (Mask a = 0; a < (Mask{1} << (n - 1)); ++a) {
        const int sa = subset_size(a), sb = n - sa;
        if (sa <= 1 || sb <= 1) continue;  // empty/singleton side is forced
        free_reps.push_back(a);
    }
    std::vector<SimplicialComplex> out;
    for (Mask choice = 0; choice < (Mask{1} << free_reps.size()); ++choice) {
        std::vector<Mask> faces;
        faces.push_back(0);
        for (int v = 0; v < n; ++v) faces.push_back(bit(v));
        for (std::size_t t = 0; t < free_reps.size(); ++t)
            faces.push_back(contains_vertex(choice, static_cast<int>(t))
                                ? free_reps[t]
                                : complement(free_reps[t], n));
        std::sort(faces.begin(), faces.end());
        bool hereditary = true;
        for (Mask f : faces) {
            for (Mask rest = f; rest && hereditary; rest &= rest - 1)
                if (!std::binary_search(faces.begin(), faces.end(), f ^ (rest & -rest)))
                    hereditary = false;
            if (!hereditary) break;
        }
        if (!hereditary) continue;
        out.push_back(SimplicialComplex::from_faces(n, std::move(faces)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Random generic length vector with integer entries (rejection sampling).
inline LengthVector random_generic_lengths(std::mt19937& rng, int n) {
    std::uniform_int_distribution<long> draw(1, 1'000'000);
    while (true) {
        std::vector<mpq_class> lens;
        for (int i = 0; i < n; ++i) lens.emplace_back(draw(rng));
        mpq_class total = 0;
        for (const auto& l : lens) total += l;
        if (std::any_of(lens.begin(), lens.end(),
                        [&](const mpq_class& l) { return 2 * l >= total; }))
            continue;
        LengthVector cand(std::move(lens));
        if (is_generic(cand)) return cand;
    }
}

/// Random ASD complex: a random threshold complex pushed off the threshold
/// locus by a few random flips (at facets of size >= 2).
inline SimplicialComplex random_asd(std::mt19937& rng, int n, int flips = 3) {
    SimplicialComplex k = short_complex(random_generic_lengths(rng, n));
    std::uniform_int_distribution<int> flip_count(0, flips);
    for (int t = flip_count(rng); t > 0; --t) {
        std::vector<Mask> candidates;
        for (Mask f : k.facets())
            if (subset_size(f) >= 2) candidates.push_back(f);
        if (candidates.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        k = k.flip(candidates[pick(rng)]);
    }
    return k;
}

}  // namespace asdc::testing
