#include "asdc/complex.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "asdc/errors.hpp"
#include "asdc/threshold.hpp"

namespace asdc {

namespace {

void check_vertex_count(int n) {
    if (n < 2 || n > kMaxVertices)
        throw Error(errc::vertex_out_of_range,
                    "vertex count must be between 2 and " + std::to_string(kMaxVertices) +
                        ", got " + std::to_string(n));
}

std::string mask_to_string(Mask a) {
    std::string s = "{";
    for (int v : mask_vertices(a)) {
        if (s.size() > 1) s += ',';
        s += std::to_string(v + 1);
    }
    return s + "}";
}

}  // namespace

void SimplicialComplex::rebuild_membership() {
    member_.assign(std::size_t{1} << n_, false);
    for (Mask f : faces_) member_[f] = true;
}

SimplicialComplex SimplicialComplex::trusted(int n, std::vector<Mask> sorted_faces) {
    SimplicialComplex k;
    k.n_ = n;
    k.faces_ = std::move(sorted_faces);
    k.rebuild_membership();
    assert(std::is_sorted(k.faces_.begin(), k.faces_.end()));
#ifndef NDEBUG
    for (int v = 0; v < n; ++v) assert(k.member_[bit(v)]);
    for (Mask f : k.faces_)
        for (int v : mask_vertices(f)) assert(k.member_[f ^ bit(v)]);
#endif
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<Mask>& facets) {
    check_vertex_count(n);
    const Mask full = full_mask(n);
    std::vector<bool> present(std::size_t{1} << n, false);
    present[0] = true;
    for (int v = 0; v < n; ++v) present[bit(v)] = true;
    for (Mask f : facets) {
        if (f & ~full)
            throw Error(errc::vertex_out_of_range,
                        "facet uses a vertex outside [1.." + std::to_string(n) + "]");
        // Walk all submasks of f.
        for (Mask s = f;; s = (s - 1) & f) {
            present[s] = true;
            if (s == 0) break;
        }
    }
    std::vector<Mask> faces;
    for (Mask a = 0; a <= full; ++a)
        if (present[a]) faces.push_back(a);
    return trusted(n, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<Mask> faces) {
    check_vertex_count(n);
    const Mask full = full_mask(n);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    std::vector<bool> present(std::size_t{1} << n, false);
    for (Mask f : faces) {
        if (f & ~full)
            throw Error(errc::vertex_out_of_range,
                        "face uses a vertex outside [1.." + std::to_string(n) + "]");
        present[f] = true;
    }
    if (!present[0]) throw Error(errc::invalid_complex, "the empty set must be a face");
    for (int v = 0; v < n; ++v)
        if (!present[bit(v)])
            throw Error(errc::invalid_complex,
                        "vertex " + std::to_string(v + 1) + " is not a face");
    for (Mask f : faces)
        for (int v : mask_vertices(f))
            if (!present[f ^ bit(v)])
                throw Error(errc::invalid_complex, "not hereditary: " + mask_to_string(f) +
                                                       " is a face but " +
                                                       mask_to_string(f ^ bit(v)) + " is not");

    SimplicialComplex k;
    k.n_ = n;
    k.faces_ = std::move(faces);
    k.member_ = std::move(present);
    return k;
}

bool SimplicialComplex::is_facet(Mask a) const {
    if (!contains(a)) return false;
    for (int v = 0; v < n_; ++v)
        if (!contains_vertex(a, v) && contains(a | bit(v))) return false;
    return true;
}

std::vector<Mask> SimplicialComplex::facets() const {
    std::vector<Mask> out;
    for (Mask f : faces_)
        if (is_facet(f)) out.push_back(f);
    return out;
}

std::vector<Mask> SimplicialComplex::minimal_nonfaces() const {
    std::vector<Mask> out;
    const Mask full = full_mask(n_);
    for (Mask a = 0; a <= full; ++a) {
        if (contains(a)) continue;
        bool minimal = true;
        for (Mask rest = a; rest && minimal; rest &= rest - 1)
            if (!contains(a ^ (rest & -rest))) minimal = false;
        if (minimal) out.push_back(a);
    }
    return out;
}

SimplicialComplex SimplicialComplex::alexander_dual() const {
    const Mask full = full_mask(n_);
    std::vector<Mask> dual;
    dual.reserve((std::size_t{1} << n_) - faces_.size());
    for (Mask a = 0; a <= full; ++a)
        if (!contains(complement(a, n_))) dual.push_back(a);

    // The dual of a complex is always hereditary; it fails to be a complex on
    // [n] exactly when the empty set or a singleton is missing, i.e. when this
    // complex has a face of size >= n-1.
    if (dual.empty() || dual.front() != 0)
        throw Error(errc::dual_not_complex, "dual misses the empty set ([n] is a face)");
    for (int v = 0; v < n_; ++v)
        if (!std::binary_search(dual.begin(), dual.end(), bit(v)))
            throw Error(errc::dual_not_complex, "dual misses vertex " + std::to_string(v + 1));
    return trusted(n_, std::move(dual));
}

bool SimplicialComplex::is_asd() const {
    const Mask half = Mask{1} << (n_ - 1);
    for (Mask a = 0; a < half; ++a)
        if (contains(a) == contains(complement(a, n_))) return false;
    return true;
}

bool SimplicialComplex::is_pre_asd() const {
    const Mask half = Mask{1} << (n_ - 1);
    for (Mask a = 0; a < half; ++a)
        if (contains(a) && contains(complement(a, n_))) return false;
    return true;
}

SimplicialComplex SimplicialComplex::flip(Mask facet) const {
    if (!is_asd()) throw Error(errc::not_asd, "flip requires an ASD complex");
    if (!is_facet(facet))
        throw Error(errc::not_a_facet, mask_to_string(facet) + " is not a facet");
    if (subset_size(facet) < 2)
        throw Error(errc::invalid_complex,
                    "flipping singleton facet " + mask_to_string(facet) +
                        " would remove a vertex");
    std::vector<Mask> faces = faces_;
    faces.erase(std::lower_bound(faces.begin(), faces.end(), facet));
    const Mask comp = complement(facet, n_);
    faces.insert(std::upper_bound(faces.begin(), faces.end(), comp), comp);
    // Every proper subset of facet^c is already a face: its complement
    // strictly contains the (maximal) face being removed.
    return trusted(n_, std::move(faces));
}

std::vector<int> contraction_vertex_map(int n, Mask face) {
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    const int merged_old = lowest_vertex(face);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (v == merged_old || !contains_vertex(face, v)) map[v] = next++;
    for (int v = 0; v < n; ++v)
        if (contains_vertex(face, v)) map[v] = map[merged_old];
    return map;
}

SimplicialComplex SimplicialComplex::contract(Mask face) const {
    if (!contains(face)) throw Error(errc::not_a_face, mask_to_string(face) + " is not a face");
    if (subset_size(face) < 2)
        throw Error(errc::too_small, "contraction needs a face of size >= 2");
    if (subset_size(face) == n_)
        throw Error(errc::too_small, "contracting the whole vertex set leaves one vertex");

    const int m = n_ - subset_size(face) + 1;
    const std::vector<int> map = contraction_vertex_map(n_, face);
    const Mask merged_bit = bit(map[lowest_vertex(face)]);

    std::vector<Mask> out;
    for (Mask a : faces_) {
        const Mask meet = a & face;
        Mask image = 0;
        if (meet == 0) {
            for (int v : mask_vertices(a)) image |= bit(map[v]);
        } else if (meet == face) {
            for (int v : mask_vertices(a & ~face)) image |= bit(map[v]);
            image |= merged_bit;
        } else {
            continue;  // meets the contracted face only partially
        }
        out.push_back(image);
    }
    std::sort(out.begin(), out.end());
    return trusted(m, std::move(out));
}

SimplicialComplex SimplicialComplex::relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw Error(errc::size_mismatch, "permutation size does not match vertex count");
    std::vector<Mask> out;
    out.reserve(faces_.size());
    for (Mask a : faces_) {
        Mask image = 0;
        for (int v : mask_vertices(a)) image |= bit(perm[v]);
        out.push_back(image);
    }
    std::sort(out.begin(), out.end());
    return trusted(n_, std::move(out));
}

SimplicialComplex pn_complex(int n) {
    check_vertex_count(n);
    const Mask rest = full_mask(n) & ~Mask{1};
    std::vector<Mask> faces;
    faces.push_back(0);
    faces.push_back(bit(0));
    for (Mask a = 1; a <= full_mask(n); ++a)
        if ((a & ~rest) == 0 && a != rest) faces.push_back(a);
    std::sort(faces.begin(), faces.end());
    return SimplicialComplex::from_faces(n, std::move(faces));
}

SimplicialComplex canonical_under_relabeling(const SimplicialComplex& k) {
    const int n = k.vertex_count();
    if (n > 7)
        throw Error(errc::too_large, "canonical relabeling is exhaustive and guarded to n <= 7");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    SimplicialComplex best = k;
    while (std::next_permutation(perm.begin(), perm.end())) {
        SimplicialComplex cand = k.relabel(perm);
        if (cand < best) best = cand;
    }
    return best;
}

std::vector<SimplicialComplex> enumerate_asd(int n, EnumerationMode mode, int max_n) {
    if (n < 3 || n > max_n)
        throw Error(errc::too_large, "enumeration guarded to 3 <= n <= " + std::to_string(max_n));

    // Threshold seed: lengths (1, ..., 1, (2n-5)/2) realize a pt-plus-simplex-
    // boundary complex, an ASD complex available for every n.
    std::vector<mpq_class> lens(static_cast<std::size_t>(n), mpq_class(1));
    lens.back() = mpq_class(2 * n - 5) / 2;
    SimplicialComplex seed = short_complex(LengthVector(std::move(lens)));

    std::set<SimplicialComplex> visited;
    std::deque<SimplicialComplex> frontier;
    visited.insert(seed);
    frontier.push_back(std::move(seed));
    while (!frontier.empty()) {
        SimplicialComplex k = std::move(frontier.front());
        frontier.pop_front();
        for (Mask f : k.facets()) {
            if (subset_size(f) < 2) continue;  // flipping would delete a vertex
            SimplicialComplex next = k.flip(f);
            if (visited.insert(next).second) frontier.push_back(std::move(next));
        }
    }

    if (mode == EnumerationMode::labeled) return {visited.begin(), visited.end()};

    std::set<SimplicialComplex> classes;
    for (const SimplicialComplex& k : visited) classes.insert(canonical_under_relabeling(k));
    return {classes.begin(), classes.end()};
}

CoincidencePartition::CoincidencePartition(int n, std::vector<Mask> blocks) : n_(n) {
    check_vertex_count(n);
    Mask seen = 0;
    for (Mask b : blocks) {
        if (b == 0) throw Error(errc::invalid_partition, "empty block");
        if (b & ~full_mask(n)) throw Error(errc::invalid_partition, "block outside vertex set");
        if (b & seen) throw Error(errc::invalid_partition, "blocks overlap");
        seen |= b;
    }
    if (seen != full_mask(n))
        throw Error(errc::invalid_partition, "blocks do not cover the vertex set");
    std::sort(blocks.begin(), blocks.end(),
              [](Mask a, Mask b) { return lowest_vertex(a) < lowest_vertex(b); });
    blocks_ = std::move(blocks);
}

bool is_stable_configuration(const SimplicialComplex& k, const CoincidencePartition& p) {
    if (k.vertex_count() != p.vertex_count())
        throw Error(errc::size_mismatch, "partition and complex have different vertex counts");
    for (Mask b : p.blocks())
        if (subset_size(b) >= 2 && !k.contains(b)) return false;
    return true;
}

bool equivalent_coarse(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (k.vertex_count() != l.vertex_count())
        throw Error(errc::size_mismatch, "complexes live on different vertex sets");
    const std::vector<Mask>& a = k.faces();
    const std::vector<Mask>& b = l.faces();
    std::vector<Mask> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    return std::all_of(diff.begin(), diff.end(), [](Mask m) { return subset_size(m) == 2; });
}

}  // namespace asdc
