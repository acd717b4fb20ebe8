#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "asdc/complex.hpp"

namespace asdc {

/// A perfect cycle: a partition of a subset of the vertices into disjoint
/// blocks of size >= 2 (points within a block coincide).  Blocks are kept
/// sorted by smallest element; the empty cycle is the ring unit.
class PerfectCycle {
  public:
    PerfectCycle() = default;

    /// Validates disjointness (errc::blocks_overlap) and block sizes
    /// (errc::invalid_cycle).
    static PerfectCycle from_blocks(std::vector<Mask> blocks);

    const std::vector<Mask>& blocks() const { return blocks_; }

    /// Codimension: sum of (|block| - 1).
    int degree() const;

    /// Union of the blocks.
    Mask support() const;

    friend bool operator==(const PerfectCycle&, const PerfectCycle&) = default;
    friend auto operator<=>(const PerfectCycle& a, const PerfectCycle& b) {
        return a.blocks_ <=> b.blocks_;
    }

  private:
    explicit PerfectCycle(std::vector<Mask> blocks) : blocks_(std::move(blocks)) {}
    friend class ChowClass;
    friend std::vector<PerfectCycle> perfect_cycles_of_degree(const SimplicialComplex&, int);

    std::vector<Mask> blocks_;
};

/// An element of the Chow ring of the compactification attached to an ambient
/// complex K: an integer combination of perfect cycles, reduced so that no
/// stored cycle has a non-face block or degree above n-3.  Immutable value
/// type; all arithmetic is by free functions / operators.
class ChowClass {
  public:
    /// The zero class of A*_K.
    explicit ChowClass(const SimplicialComplex& ambient);

    const SimplicialComplex& ambient() const { return *ambient_; }

    bool is_zero() const { return buckets_.empty(); }

    /// Degree of a homogeneous class; -1 for the zero class.  Throws
    /// errc::degree_mismatch when terms of several degrees are present.
    int homogeneous_degree() const;

    /// Terms of one degree: cycle -> coefficient.
    const std::map<PerfectCycle, long long>& degree_terms(int degree) const;

    /// All buckets: degree -> (cycle -> coefficient).
    const std::map<int, std::map<PerfectCycle, long long>>& buckets() const { return buckets_; }

    friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator-(const ChowClass& a);
    friend ChowClass operator*(long long c, const ChowClass& a);
    friend bool operator==(const ChowClass& a, const ChowClass& b);

  private:
    friend ChowClass cycle_class(const SimplicialComplex&, const std::vector<Mask>&);
    friend ChowClass unit_class(const SimplicialComplex&);
    friend ChowClass multiply(const ChowClass&, const ChowClass&);

    void insert_term(const PerfectCycle& cycle, long long coeff);

    std::shared_ptr<const SimplicialComplex> ambient_;
    std::map<int, std::map<PerfectCycle, long long>> buckets_;
};

/// The class of the perfect cycle with the given blocks, or the zero class
/// when a block is a non-face or the degree exceeds n-3.
ChowClass cycle_class(const SimplicialComplex& k, const std::vector<Mask>& blocks);

/// The unit class (empty cycle, coefficient one).
ChowClass unit_class(const SimplicialComplex& k);

/// Cup product.  Each cycle of y is split into elementary factors (i j) and
/// folded into x one at a time via the multiplication rules; factors with
/// both ends in one block are rewritten through the four-term relation
/// (ij) = (ik) + (jl) - (kl) with the lexicographically smallest valid (k,l).
/// Non-face and over-degree terms are dropped as they appear.
ChowClass multiply(const ChowClass& x, const ChowClass& y);

/// The psi-class at marked point i, expressed as (ij) + (ik) - (jk).
/// Vertices are 0-based and must be distinct.
ChowClass psi_class(const SimplicialComplex& k, int i, int j, int k_aux);

/// Evaluation of a homogeneous top-degree (n-3) class against the fundamental
/// class: every stored top cycle contributes its coefficient.
long long evaluate_top(const ChowClass& x);

/// Equality test via the intersection pairing: x == y iff (x - y) pairs to
/// zero against every perfect cycle of complementary degree.  Exact over the
/// rationals; over the integers it additionally assumes the pairing is
/// unimodular, which holds empirically on every complex the suites cover.
bool eq_via_pairing(const ChowClass& x, const ChowClass& y);

/// All perfect cycles of the given degree whose blocks are all faces of K.
std::vector<PerfectCycle> perfect_cycles_of_degree(const SimplicialComplex& k, int degree);

/// A basis of the degree-one group from a unicyclic graph with an odd cycle:
/// the elementary cycles of its edges, plus integral rewriting of any (ab).
class UnicycleBasis {
  public:
    /// Validates the graph: n edges on n vertices, connected, unique cycle of
    /// odd length (errc::not_unicycle / errc::even_cycle).
    UnicycleBasis(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// The basis as perfect cycles, in edge order.
    std::vector<PerfectCycle> basis_cycles() const;

    /// Coordinates of the elementary cycle (ab) in this basis.
    std::vector<long long> rewrite_pair(int a, int b) const;

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<mpq_class>> inverse_;  // of the edge-incidence matrix
};

struct AbelianGroupInfo {
    int rank = 0;
    std::vector<long long> torsion;
};

/// Rank and torsion of the degree-one Chow group of an ASD complex: the free
/// group on a unicycle basis modulo the rewritten non-face pairs.
AbelianGroupInfo degree1_group(const SimplicialComplex& k);

/// Rank of the degree-d graded piece: all-face degree-d perfect cycles modulo
/// products of degree-(d-1) cycles with the four-term relations.
int graded_rank(const SimplicialComplex& k, int degree);

}  // namespace asdc
