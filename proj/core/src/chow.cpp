#include "asdc/chow.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "asdc/errors.hpp"
#include "asdc/smith.hpp"

namespace asdc {

namespace {

void sort_blocks(std::vector<Mask>& blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](Mask a, Mask b) { return lowest_vertex(a) < lowest_vertex(b); });
}

int blocks_degree(const std::vector<Mask>& blocks) {
    int d = 0;
    for (Mask b : blocks) d += subset_size(b) - 1;
    return d;
}

int find_block(const std::vector<Mask>& blocks, int v) {
    for (std::size_t t = 0; t < blocks.size(); ++t)
        if (contains_vertex(blocks[t], v)) return static_cast<int>(t);
    return -1;
}

}  // namespace

PerfectCycle PerfectCycle::from_blocks(std::vector<Mask> blocks) {
    Mask seen = 0;
    for (Mask b : blocks) {
        if (subset_size(b) < 2)
            throw Error(errc::invalid_cycle, "perfect-cycle blocks need at least two elements");
        if (b & seen) throw Error(errc::blocks_overlap, "perfect-cycle blocks overlap");
        seen |= b;
    }
    sort_blocks(blocks);
    return PerfectCycle(std::move(blocks));
}

int PerfectCycle::degree() const { return blocks_degree(blocks_); }

Mask PerfectCycle::support() const {
    Mask s = 0;
    for (Mask b : blocks_) s |= b;
    return s;
}

ChowClass::ChowClass(const SimplicialComplex& ambient)
    : ambient_(std::make_shared<SimplicialComplex>(ambient)) {}

int ChowClass::homogeneous_degree() const {
    if (buckets_.empty()) return -1;
    if (buckets_.size() > 1)
        throw Error(errc::degree_mismatch, "class has terms of several degrees");
    return buckets_.begin()->first;
}

const std::map<PerfectCycle, long long>& ChowClass::degree_terms(int degree) const {
    static const std::map<PerfectCycle, long long> empty;
    auto it = buckets_.find(degree);
    return it == buckets_.end() ? empty : it->second;
}

void ChowClass::insert_term(const PerfectCycle& cycle, long long coeff) {
    if (coeff == 0) return;
    auto& bucket = buckets_[cycle.degree()];
    auto it = bucket.find(cycle);
    if (it == bucket.end()) {
        bucket.emplace(cycle, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) {
        bucket.erase(it);
        if (bucket.empty()) buckets_.erase(cycle.degree());
    }
}

namespace {

void require_same_ambient(const ChowClass& a, const ChowClass& b) {
    if (&a.ambient() == &b.ambient()) return;
    if (a.ambient() == b.ambient()) return;
    throw Error(errc::ambient_mismatch, "classes live in rings of different complexes");
}

}  // namespace

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    require_same_ambient(a, b);
    ChowClass out = a;
    for (const auto& [deg, terms] : b.buckets())
        for (const auto& [cycle, coeff] : terms) out.insert_term(cycle, coeff);
    return out;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + (-b); }

ChowClass operator-(const ChowClass& a) { return -1 * a; }

ChowClass operator*(long long c, const ChowClass& a) {
    ChowClass out(a.ambient());
    if (c == 0) return out;
    out.ambient_ = a.ambient_;
    out.buckets_ = a.buckets_;
    for (auto& [deg, terms] : out.buckets_)
        for (auto& [cycle, coeff] : terms) coeff *= c;
    return out;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
    require_same_ambient(a, b);
    return a.buckets_ == b.buckets_;
}

ChowClass cycle_class(const SimplicialComplex& k, const std::vector<Mask>& blocks) {
    for (Mask b : blocks)
        if (b & ~full_mask(k.vertex_count()))
            throw Error(errc::vertex_out_of_range, "block uses a vertex outside the complex");
    PerfectCycle cycle = PerfectCycle::from_blocks(blocks);
    ChowClass out(k);
    if (cycle.degree() > k.vertex_count() - 3) return out;
    for (Mask b : cycle.blocks())
        if (!k.contains(b)) return out;
    out.insert_term(cycle, 1);
    return out;
}

ChowClass unit_class(const SimplicialComplex& k) {
    ChowClass out(k);
    out.insert_term(PerfectCycle(), 1);
    return out;
}

namespace {

// Folds elementary factors (i j) into a cycle, accumulating surviving terms.
// Cases: both ends uncovered (adjoin a pair block), one end covered (grow the
// block), ends in two blocks (merge), ends in one block (four-term rewrite).
void fold_factors(const SimplicialComplex& k, std::vector<Mask> blocks,
                  std::vector<std::pair<int, int>> factors, std::size_t idx, long long coeff,
                  std::map<PerfectCycle, long long>& acc) {
    const int n = k.vertex_count();
    const int top = n - 3;
    int degree = blocks_degree(blocks);

    while (idx < factors.size()) {
        const auto [i, j] = factors[idx];
        const int bi = find_block(blocks, i);
        const int bj = find_block(blocks, j);

        if (bi >= 0 && bi == bj) {
            // Rewrite (ij) = (ik) + (jl) - (kl), lexicographically smallest
            // valid ordered pair (k, l) off the block and not sharing a block.
            const Mask inside = blocks[static_cast<std::size_t>(bi)];
            int kk = -1, ll = -1;
            for (int a = 0; a < n && kk < 0; ++a) {
                if (contains_vertex(inside, a)) continue;
                for (int b = 0; b < n; ++b) {
                    if (b == a || contains_vertex(inside, b)) continue;
                    const int ba = find_block(blocks, a);
                    const int bb = find_block(blocks, b);
                    if (ba >= 0 && ba == bb) continue;
                    kk = a;
                    ll = b;
                    break;
                }
            }
            if (kk < 0)
                throw Defect("no four-term rewrite pair; a complementary non-face block "
                             "survived dropping");
            auto rest = factors;
            rest[idx] = {i, kk};
            fold_factors(k, blocks, rest, idx, coeff, acc);
            rest[idx] = {j, ll};
            fold_factors(k, blocks, rest, idx, coeff, acc);
            rest[idx] = {kk, ll};
            fold_factors(k, std::move(blocks), std::move(rest), idx, -coeff, acc);
            return;
        }

        Mask grown;
        if (bi < 0 && bj < 0) {
            grown = bit(i) | bit(j);
            blocks.push_back(grown);
        } else if (bi >= 0 && bj < 0) {
            grown = blocks[static_cast<std::size_t>(bi)] | bit(j);
            blocks[static_cast<std::size_t>(bi)] = grown;
        } else if (bj >= 0 && bi < 0) {
            grown = blocks[static_cast<std::size_t>(bj)] | bit(i);
            blocks[static_cast<std::size_t>(bj)] = grown;
        } else {
            grown = blocks[static_cast<std::size_t>(bi)] | blocks[static_cast<std::size_t>(bj)];
            blocks.erase(blocks.begin() + std::max(bi, bj));
            blocks.erase(blocks.begin() + std::min(bi, bj));
            blocks.push_back(grown);
        }
        if (++degree > top || !k.contains(grown)) return;  // term vanishes
        sort_blocks(blocks);
        ++idx;
    }

    PerfectCycle cycle = PerfectCycle::from_blocks(std::move(blocks));
    auto [it, fresh] = acc.try_emplace(cycle, coeff);
    if (!fresh) it->second += coeff;
}

std::vector<std::pair<int, int>> elementary_factors(const PerfectCycle& cycle) {
    std::vector<std::pair<int, int>> factors;
    for (Mask b : cycle.blocks()) {
        const int head = lowest_vertex(b);
        for (int v : mask_vertices(b & ~bit(head))) factors.emplace_back(head, v);
    }
    return factors;
}

}  // namespace

ChowClass multiply(const ChowClass& x, const ChowClass& y) {
    require_same_ambient(x, y);
    const SimplicialComplex& k = x.ambient();
    std::map<PerfectCycle, long long> acc;
    for (const auto& [dy, termsY] : y.buckets()) {
        for (const auto& [cycleY, cY] : termsY) {
            const auto factors = elementary_factors(cycleY);
            for (const auto& [dx, termsX] : x.buckets())
                for (const auto& [cycleX, cX] : termsX)
                    fold_factors(k, cycleX.blocks(), factors, 0, cX * cY, acc);
        }
    }
    ChowClass out(k);
    out.ambient_ = x.ambient_;
    for (const auto& [cycle, coeff] : acc) out.insert_term(cycle, coeff);
    return out;
}

ChowClass psi_class(const SimplicialComplex& k, int i, int j, int k_aux) {
    const int n = k.vertex_count();
    if (i < 0 || j < 0 || k_aux < 0 || i >= n || j >= n || k_aux >= n)
        throw Error(errc::vertex_out_of_range, "psi indices must lie in the vertex set");
    if (i == j || i == k_aux || j == k_aux)
        throw Error(errc::not_distinct, "psi expansion needs three distinct marked points");
    return cycle_class(k, {bit(i) | bit(j)}) + cycle_class(k, {bit(i) | bit(k_aux)}) -
           cycle_class(k, {bit(j) | bit(k_aux)});
}

long long evaluate_top(const ChowClass& x) {
    const int top = x.ambient().vertex_count() - 3;
    if (x.is_zero()) return 0;
    const auto& buckets = x.buckets();
    if (buckets.size() > 1 || buckets.begin()->first != top)
        throw Error(errc::not_top_degree, "class is not homogeneous of degree n-3");
    long long sum = 0;
    for (const auto& [cycle, coeff] : buckets.begin()->second) sum += coeff;
    return sum;
}

std::vector<PerfectCycle> perfect_cycles_of_degree(const SimplicialComplex& k, int degree) {
    const int n = k.vertex_count();
    std::vector<PerfectCycle> out;
    if (degree < 0) return out;
    if (degree == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<Mask> blocks;
    // Blocks are chosen with strictly increasing smallest elements.
    auto rec = [&](auto&& self, int start, Mask used, int left) -> void {
        if (left == 0) {
            std::vector<Mask> sorted = blocks;
            out.push_back(PerfectCycle::from_blocks(std::move(sorted)));
            return;
        }
        for (int v = start; v < n; ++v) {
            if (contains_vertex(used, v)) continue;
            const Mask avail = full_mask(n) & ~used & ~(full_mask(v + 1));
            // Every subset R of the later unused vertices, 1 <= |R| <= left.
            for (Mask r = avail; r; r = (r - 1) & avail) {
                if (subset_size(r) > left) continue;
                const Mask block = bit(v) | r;
                if (!k.contains(block)) continue;
                blocks.push_back(block);
                self(self, v + 1, used | block, left - subset_size(r));
                blocks.pop_back();
            }
        }
    };
    rec(rec, 0, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

bool eq_via_pairing(const ChowClass& x, const ChowClass& y) {
    require_same_ambient(x, y);
    const int dx = x.homogeneous_degree();
    const int dy = y.homogeneous_degree();
    if (dx >= 0 && dy >= 0 && dx != dy)
        throw Error(errc::degree_mismatch, "classes have different degrees");
    ChowClass diff = x - y;
    if (diff.is_zero()) return true;
    const int d = diff.homogeneous_degree();
    const SimplicialComplex& k = x.ambient();
    for (const PerfectCycle& probe : perfect_cycles_of_degree(k, k.vertex_count() - 3 - d))
        if (evaluate_top(multiply(diff, cycle_class(k, probe.blocks()))) != 0) return false;
    return true;
}

UnicycleBasis::UnicycleBasis(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 3 || n > kMaxVertices)
        throw Error(errc::not_unicycle, "need at least three vertices");
    if (static_cast<int>(edges_.size()) != n)
        throw Error(errc::not_unicycle, "a tree plus one edge has exactly n edges");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw Error(errc::not_unicycle, "edge endpoint out of range");
        if (u == v) throw Error(errc::not_unicycle, "self-loop");
        if (!seen.insert({u, v}).second)
            throw Error(errc::even_cycle, "repeated edge forms a two-cycle");
    }

    // Connectivity: union-find over the edge list.
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : edges_) parent[root(u)] = root(v);
    for (int v = 0; v < n; ++v)
        if (root(v) != root(0)) throw Error(errc::not_unicycle, "graph is disconnected");

    // Peel leaves; what remains is the unique cycle.
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges_) ++deg[u], ++deg[v];
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < n; ++v) {
            if (removed[v] || deg[v] != 1) continue;
            removed[v] = true;
            progress = true;
            for (const auto& [a, b] : edges_) {
                if (removed[a] && removed[b]) continue;
                if (a == v || b == v) --deg[a], --deg[b];
            }
        }
    }
    int cycle_len = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) ++cycle_len;
    if (cycle_len % 2 == 0)
        throw Error(errc::even_cycle, "the unique cycle has even length");

    // Invert the vertex/edge incidence matrix over the rationals.
    std::vector<std::vector<mpq_class>> aug(
        static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(2 * n), 0));
    for (int t = 0; t < n; ++t) {
        aug[edges_[t].first][t] = 1;
        aug[edges_[t].second][t] = 1;
    }
    for (int v = 0; v < n; ++v) aug[v][n + v] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (aug[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Defect("odd unicycle incidence matrix is singular");
        std::swap(aug[col], aug[pivot]);
        const mpq_class inv = 1 / aug[col][col];
        for (int c = col; c < 2 * n; ++c) aug[col][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const mpq_class f = aug[r][col];
            for (int c = col; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    inverse_.assign(static_cast<std::size_t>(n),
                    std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inverse_[r][c] = aug[r][n + c];
}

std::vector<PerfectCycle> UnicycleBasis::basis_cycles() const {
    std::vector<PerfectCycle> out;
    out.reserve(edges_.size());
    for (const auto& [u, v] : edges_)
        out.push_back(PerfectCycle::from_blocks({bit(u) | bit(v)}));
    return out;
}

std::vector<long long> UnicycleBasis::rewrite_pair(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw Error(errc::vertex_out_of_range, "pair endpoint out of range");
    if (a == b) throw Error(errc::not_distinct, "pair endpoints must differ");
    std::vector<long long> out(static_cast<std::size_t>(n_));
    for (int t = 0; t < n_; ++t) {
        mpq_class c = inverse_[t][a] + inverse_[t][b];
        if (c.get_den() != 1) throw Defect("non-integral rewrite in an odd unicycle basis");
        out[static_cast<std::size_t>(t)] = static_cast<long long>(c.get_num().get_si());
    }
    return out;
}

namespace {

UnicycleBasis default_unicycle(int n) {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {0, 2}};
    for (int v = 2; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return UnicycleBasis(n, std::move(edges));
}

}  // namespace

AbelianGroupInfo degree1_group(const SimplicialComplex& k) {
    if (!k.is_asd()) throw Error(errc::not_asd, "degree-one group needs an ASD complex");
    const int n = k.vertex_count();
    const UnicycleBasis basis = default_unicycle(n);

    std::vector<std::vector<mpz_class>> rows;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (k.contains(bit(a) | bit(b))) continue;
            const auto coords = basis.rewrite_pair(a, b);
            std::vector<mpz_class> row;
            row.reserve(coords.size());
            for (long long c : coords) row.emplace_back(static_cast<long>(c));
            rows.push_back(std::move(row));
        }

    const SmithResult snf = smith_normal_form(std::move(rows));
    AbelianGroupInfo info;
    info.rank = n - snf.rank;
    for (const mpz_class& d : snf.torsion())
        info.torsion.push_back(static_cast<long long>(d.get_si()));
    return info;
}

int graded_rank(const SimplicialComplex& k, int degree) {
    if (!k.is_asd()) throw Error(errc::not_asd, "graded rank needs an ASD complex");
    const int n = k.vertex_count();
    if (degree < 0 || degree > n - 3)
        throw Error(errc::degree_mismatch, "degree outside [0, n-3]");
    if (degree == 0) return 1;

    const std::vector<PerfectCycle> gens = perfect_cycles_of_degree(k, degree);
    if (gens.empty()) return 0;
    std::map<PerfectCycle, std::size_t> index;
    for (std::size_t t = 0; t < gens.size(); ++t) index.emplace(gens[t], t);

    auto coords = [&](const ChowClass& c) {
        std::vector<mpz_class> row(gens.size(), 0);
        for (const auto& [cycle, coeff] : c.degree_terms(degree)) {
            auto it = index.find(cycle);
            if (it == index.end()) throw Defect("product term escaped the spanning set");
            row[it->second] = static_cast<long>(coeff);
        }
        return row;
    };

    std::set<std::vector<mpz_class>> rows;
    const std::vector<mpz_class> zero(gens.size(), 0);
    for (const PerfectCycle& q : perfect_cycles_of_degree(k, degree - 1)) {
        const ChowClass base = cycle_class(k, q.blocks());
        auto pair_product = [&](int a, int b) {
            return coords(multiply(base, cycle_class(k, {bit(a) | bit(b)})));
        };
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int a = j + 1; a < n; ++a)
                    for (int b = a + 1; b < n; ++b) {
                        // Two independent pairings of {i,j,a,b}; the third is
                        // their difference.
                        const auto ij = pair_product(i, j);
                        const auto ab = pair_product(a, b);
                        const auto ia = pair_product(i, a);
                        const auto jb = pair_product(j, b);
                        const auto ib = pair_product(i, b);
                        const auto ja = pair_product(j, a);
                        std::vector<mpz_class> r1(gens.size()), r2(gens.size());
                        for (std::size_t t = 0; t < gens.size(); ++t) {
                            r1[t] = ij[t] + ab[t] - ia[t] - jb[t];
                            r2[t] = ij[t] + ab[t] - ib[t] - ja[t];
                        }
                        if (r1 != zero) rows.insert(std::move(r1));
                        if (r2 != zero) rows.insert(std::move(r2));
                    }
    }

    std::vector<std::vector<mpz_class>> matrix(rows.begin(), rows.end());
    const SmithResult snf = smith_normal_form(std::move(matrix));
    return static_cast<int>(gens.size()) - snf.rank;
}

}  // namespace asdc
