#include "asdc/threshold.hpp"

#include <cassert>
#include <string>
#include <utility>

#include "asdc/errors.hpp"
#include "asdc/linprog.hpp"

namespace asdc {

LengthVector::LengthVector(std::vector<mpq_class> lengths) : lengths_(std::move(lengths)) {
    const int n = static_cast<int>(lengths_.size());
    if (n < 2 || n > kMaxVertices)
        throw Error(errc::invalid_lengths, "need between 2 and 24 lengths");
    total_ = 0;
    for (const mpq_class& l : lengths_) {
        if (l <= 0) throw Error(errc::invalid_lengths, "lengths must be positive");
        total_ += l;
    }
    for (const mpq_class& l : lengths_)
        if (2 * l >= total_)
            throw Error(errc::invalid_lengths,
                        "polygon inequality violated: one bar is at least as long as the rest");
}

mpq_class LengthVector::subset_sum(Mask subset) const {
    mpq_class sum = 0;
    for (int v : mask_vertices(subset)) sum += lengths_[static_cast<std::size_t>(v)];
    return sum;
}

bool is_generic(const LengthVector& l) {
    const int n = l.size();
    const Mask half = Mask{1} << (n - 1);
    for (Mask a = 1; a < half; ++a)
        if (2 * l.subset_sum(a) == l.total()) return false;
    return true;
}

SimplicialComplex short_complex(const LengthVector& l) {
    if (!is_generic(l))
        throw Error(errc::not_generic, "length vector lies on a wall");
    const int n = l.size();
    std::vector<Mask> faces;
    for (Mask a = 0; a <= full_mask(n); ++a)
        if (2 * l.subset_sum(a) < l.total()) faces.push_back(a);
    SimplicialComplex k = SimplicialComplex::from_faces(n, std::move(faces));
    assert(k.is_asd());
    return k;
}

bool same_chamber(const LengthVector& a, const LengthVector& b) {
    if (a.size() != b.size())
        throw Error(errc::size_mismatch, "length vectors have different sizes");
    return short_complex(a) == short_complex(b);
}

std::optional<LengthVector> realize_threshold(const SimplicialComplex& k, int max_n,
                                              RealizeDiagnostics* diagnostics) {
    if (!k.is_asd()) throw Error(errc::not_asd, "threshold realization requires an ASD complex");
    const int n = k.vertex_count();
    if (n > max_n)
        throw Error(errc::too_large, "realization guarded to n <= " + std::to_string(max_n));

    // Variables: l_1..l_n and a slack s.  Scale invariance lets strict
    // inequalities become l_i >= 1, s >= 1,
    //   sum_F l - sum_{F^c} l <= -2s   for every facet F,
    //   sum_N l - sum_{N^c} l >= 2s   for every minimal non-face N.
    // Any solution keeps every subset off the wall by s, so the witness is
    // generic and its short complex is exactly K.
    LinearSystem sys;
    sys.num_vars = n + 1;
    const int slack = n;

    auto subset_row = [&](Mask subset, int sign, const mpq_class& slack_coeff) {
        std::vector<mpq_class> row(static_cast<std::size_t>(n + 1), 0);
        for (int v = 0; v < n; ++v)
            row[static_cast<std::size_t>(v)] = contains_vertex(subset, v) ? sign : -sign;
        row[static_cast<std::size_t>(slack)] = slack_coeff;
        return row;
    };
    auto label_set = [](const char* what, Mask a) {
        std::string s = what;
        s += " {";
        bool first = true;
        for (int v : mask_vertices(a)) {
            if (!first) s += ',';
            s += std::to_string(v + 1);
            first = false;
        }
        return s + "}";
    };

    for (int v = 0; v < n; ++v) {
        std::vector<mpq_class> row(static_cast<std::size_t>(n + 1), 0);
        row[static_cast<std::size_t>(v)] = 1;
        sys.add(std::move(row), 1, "l" + std::to_string(v + 1) + " >= 1");
    }
    {
        std::vector<mpq_class> row(static_cast<std::size_t>(n + 1), 0);
        row[static_cast<std::size_t>(slack)] = 1;
        sys.add(std::move(row), 1, "s >= 1");
    }
    for (Mask f : k.facets())
        sys.add(subset_row(f, -1, -2), 0, label_set("short facet", f));
    for (Mask nf : k.minimal_nonfaces())
        sys.add(subset_row(nf, 1, -2), 0, label_set("long non-face", nf));

    FeasibilityResult fm = fourier_motzkin(sys);
    if (!fm.feasible) {
        if (diagnostics) {
            diagnostics->constraint_labels = sys.labels;
            diagnostics->multipliers = fm.farkas;
        }
        return std::nullopt;
    }

    std::vector<mpq_class> lengths(fm.point.begin(), fm.point.begin() + n);
    LengthVector witness(std::move(lengths));
    if (short_complex(witness) != k)
        throw Defect("threshold witness does not reproduce the complex");
    return witness;
}

}  // namespace asdc
