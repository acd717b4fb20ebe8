#pragma once

#include <compare>
#include <vector>

#include "asdc/subset.hpp"

namespace asdc {

/// A simplicial complex on the vertex set {0, ..., n-1}, with every face
/// stored explicitly as a bit mask.  Invariants maintained by every
/// constructor:
///   - downward closed (hereditary),
///   - the empty set and every singleton are faces,
///   - the face list is sorted ascending by mask value (canonical form),
/// so two complexes are equal iff their n and face lists are equal.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Downward closure of a facet list.  Singletons and the empty set are
    /// added implicitly.  Throws errc::vertex_out_of_range if a facet uses a
    /// vertex outside [0, n).
    static SimplicialComplex from_facets(int n, const std::vector<Mask>& facets);

    /// Builds from an explicit face list, validating every invariant.
    /// Throws errc::invalid_complex on a hereditary or singleton violation.
    static SimplicialComplex from_faces(int n, std::vector<Mask> faces);

    int vertex_count() const { return n_; }

    /// All faces, sorted ascending by mask value.  Includes the empty mask.
    const std::vector<Mask>& faces() const { return faces_; }

    bool contains(Mask a) const { return member_[a]; }

    bool is_facet(Mask a) const;

    /// Inclusion-maximal faces, sorted ascending.
    std::vector<Mask> facets() const;

    /// Inclusion-minimal non-faces, sorted ascending.
    std::vector<Mask> minimal_nonfaces() const;

    /// The Alexander dual {A : complement(A) not a face}.  Always hereditary;
    /// throws errc::dual_not_complex when the dual misses the empty set or a
    /// singleton (i.e. this complex has a face of size >= n-1).
    SimplicialComplex alexander_dual() const;

    /// Exactly one of each complementary pair (A, A^c) is a face.
    bool is_asd() const;

    /// At most one of each complementary pair is a face.
    bool is_pre_asd() const;

    /// Replaces facet A by its complement.  Requires an ASD complex and a
    /// facet of size >= 2 (flipping a singleton facet would delete a vertex).
    SimplicialComplex flip(Mask facet) const;

    /// Contracts (freezes) the face I, |I| >= 2, merging its vertices into
    /// one placed at min(I); remaining labels are compacted preserving order.
    /// The result has n - |I| + 1 vertices.
    SimplicialComplex contract(Mask face) const;

    /// Applies a vertex permutation: perm[old] = new.
    SimplicialComplex relabel(const std::vector<int>& perm) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.faces_ == b.faces_;
    }

    friend std::strong_ordering operator<=>(const SimplicialComplex& a,
                                            const SimplicialComplex& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.faces_ <=> b.faces_;
    }

  private:
    // Trusted constructor for faces known to satisfy all invariants.
    // Validates anyway in debug builds.
    static SimplicialComplex trusted(int n, std::vector<Mask> sorted_faces);

    void rebuild_membership();

    int n_ = 0;
    std::vector<Mask> faces_;
    std::vector<bool> member_;
};

/// Old-vertex -> new-vertex map used by contract(): every vertex of `face`
/// maps to the merged slot (at the compacted position of min(face)).
std::vector<int> contraction_vertex_map(int n, Mask face);

/// The complex pt \sqcup (boundary of the simplex on the other n-1 vertices),
/// with the lone point at vertex 0.  ASD for every n >= 3; its
/// compactification is projective (n-3)-space.
SimplicialComplex pn_complex(int n);

/// Minimum, over all vertex relabelings, of the canonical face list.
/// Exhaustive over n! permutations; guarded to n <= 7.
SimplicialComplex canonical_under_relabeling(const SimplicialComplex& k);

enum class EnumerationMode { labeled, up_to_relabeling };

/// All ASD complexes on n vertices, found by BFS over the flip graph from a
/// threshold seed.  `max_n` is a resource guard (errc::too_large beyond it).
std::vector<SimplicialComplex> enumerate_asd(int n, EnumerationMode mode, int max_n = 6);

/// A partition of the vertex set into disjoint nonempty blocks, recording
/// which marked points coincide.
class CoincidencePartition {
  public:
    CoincidencePartition(int n, std::vector<Mask> blocks);

    int vertex_count() const { return n_; }
    const std::vector<Mask>& blocks() const { return blocks_; }

  private:
    int n_ = 0;
    std::vector<Mask> blocks_;
};

/// True iff every coincidence class of size >= 2 is a face of K.
bool is_stable_configuration(const SimplicialComplex& k, const CoincidencePartition& p);

/// True iff the symmetric difference of the two face sets consists of
/// two-element sets only (the complexes then give the same coarse space).
bool equivalent_coarse(const SimplicialComplex& k, const SimplicialComplex& l);

}  // namespace asdc
