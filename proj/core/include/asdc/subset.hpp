#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace asdc {

/// A subset of the vertex set {0, ..., n-1} packed into the low n bits.
/// Vertices are 0-based internally; all external interfaces (JSON, CLI,
/// cycle syntax) are 1-based and converted at the boundary.
using Mask = std::uint32_t;

inline constexpr int kMaxVertices = 24;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }

constexpr Mask complement(Mask a, int n) { return ~a & full_mask(n); }

constexpr int subset_size(Mask a) { return std::popcount(a); }

/// Smallest vertex of a nonempty mask.
constexpr int lowest_vertex(Mask a) { return std::countr_zero(a); }

constexpr bool contains_vertex(Mask a, int v) { return (a >> v) & 1u; }

inline Mask mask_of(std::initializer_list<int> vertices) {
    Mask m = 0;
    for (int v : vertices) m |= bit(v);
    return m;
}

inline std::vector<int> mask_vertices(Mask a) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(subset_size(a)));
    while (a) {
        out.push_back(std::countr_zero(a));
        a &= a - 1;
    }
    return out;
}

}  // namespace asdc
