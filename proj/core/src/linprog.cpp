#include "asdc/linprog.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "asdc/errors.hpp"

namespace asdc {

void LinearSystem::add(std::vector<mpq_class> row, mpq_class bound, std::string label) {
    if (static_cast<int>(row.size()) != num_vars)
        throw Defect("linear system row has wrong arity");
    rows.push_back(std::move(row));
    rhs.push_back(std::move(bound));
    labels.push_back(std::move(label));
}

namespace {

struct WorkRow {
    std::vector<mpq_class> coeffs;
    mpq_class rhs;
    std::vector<mpq_class> mults;  // combination of original rows

    bool coeffs_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(),
                           [](const mpq_class& c) { return c == 0; });
    }
};

// Scales by a positive rational so the coefficient vector becomes a primitive
// integer vector (parallel constraints then share a key for deduplication).
void normalize(WorkRow& row) {
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const mpq_class& c : row.coeffs) {
        if (c == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    if (num_gcd == 0) return;  // constant row
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (factor < 0) factor = -factor;
    for (mpq_class& c : row.coeffs) c *= factor;
    row.rhs *= factor;
    for (mpq_class& m : row.mults) m *= factor;
}

WorkRow combine(const WorkRow& lower, const WorkRow& upper, int var) {
    // lower has positive, upper negative coefficient on var; the combination
    // (-b)*lower + a*upper cancels it and stays a valid >= constraint.
    const mpq_class a = lower.coeffs[var];
    const mpq_class nb = -upper.coeffs[var];
    WorkRow out;
    out.coeffs.resize(lower.coeffs.size());
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = nb * lower.coeffs[i] + a * upper.coeffs[i];
    out.coeffs[var] = 0;
    out.rhs = nb * lower.rhs + a * upper.rhs;
    out.mults.resize(lower.mults.size());
    for (std::size_t i = 0; i < out.mults.size(); ++i)
        out.mults[i] = nb * lower.mults[i] + a * upper.mults[i];
    normalize(out);
    return out;
}

void verify_certificate(const LinearSystem& system, const std::vector<mpq_class>& farkas) {
    std::vector<mpq_class> combo(static_cast<std::size_t>(system.num_vars), 0);
    mpq_class bound = 0;
    for (std::size_t i = 0; i < system.rows.size(); ++i) {
        if (farkas[i] < 0) throw Defect("negative Farkas multiplier");
        for (int v = 0; v < system.num_vars; ++v) combo[v] += farkas[i] * system.rows[i][v];
        bound += farkas[i] * system.rhs[i];
    }
    for (const mpq_class& c : combo)
        if (c != 0) throw Defect("Farkas combination does not cancel");
    if (bound <= 0) throw Defect("Farkas combination is not contradictory");
}

}  // namespace

FeasibilityResult fourier_motzkin(const LinearSystem& system) {
    const int nvars = system.num_vars;
    const std::size_t nrows = system.rows.size();

    std::vector<WorkRow> work;
    work.reserve(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
        WorkRow row;
        row.coeffs = system.rows[i];
        row.rhs = system.rhs[i];
        row.mults.assign(nrows, 0);
        row.mults[i] = 1;
        normalize(row);
        work.push_back(std::move(row));
    }

    struct Stage {
        int var;
        std::vector<std::pair<std::vector<mpq_class>, mpq_class>> rows;  // coeffs, rhs
    };
    std::vector<Stage> stages;
    std::vector<bool> eliminated(static_cast<std::size_t>(nvars), false);

    FeasibilityResult result;

    // Drops tautological constant rows; on a contradictory constant row
    // (0 >= positive) fills the Farkas certificate and reports infeasibility.
    auto sweep_constants = [&](std::vector<WorkRow>& rows) -> bool {
        std::vector<WorkRow> kept;
        kept.reserve(rows.size());
        for (WorkRow& row : rows) {
            if (row.coeffs_zero()) {
                if (row.rhs > 0) {
                    result.feasible = false;
                    result.farkas = row.mults;
                    verify_certificate(system, result.farkas);
                    return true;
                }
                continue;
            }
            kept.push_back(std::move(row));
        }
        rows = std::move(kept);
        return false;
    };

    for (int step = 0; step < nvars; ++step) {
        if (sweep_constants(work)) return result;

        // Deduplicate parallel constraints, keeping the tightest bound.
        std::map<std::vector<mpq_class>, std::size_t> seen;
        std::vector<WorkRow> unique;
        for (WorkRow& row : work) {
            auto [it, fresh] = seen.try_emplace(row.coeffs, unique.size());
            if (fresh) {
                unique.push_back(std::move(row));
            } else if (row.rhs > unique[it->second].rhs) {
                unique[it->second] = std::move(row);
            }
        }
        work = std::move(unique);

        // Pick the variable minimizing the product of lower and upper counts.
        int var = -1;
        long best = -1;
        for (int v = 0; v < nvars; ++v) {
            if (eliminated[v]) continue;
            long pos = 0, neg = 0;
            for (const WorkRow& row : work) {
                if (row.coeffs[v] > 0) ++pos;
                if (row.coeffs[v] < 0) ++neg;
            }
            const long score = pos * neg + pos + neg;
            if (var == -1 || score < best) {
                var = v;
                best = score;
            }
        }

        Stage stage;
        stage.var = var;
        for (const WorkRow& row : work)
            stage.rows.emplace_back(row.coeffs, row.rhs);
        stages.push_back(std::move(stage));
        eliminated[var] = true;

        std::vector<WorkRow> next;
        std::vector<const WorkRow*> lowers, uppers;
        for (WorkRow& row : work) {
            if (row.coeffs[var] > 0)
                lowers.push_back(&row);
            else if (row.coeffs[var] < 0)
                uppers.push_back(&row);
            else
                next.push_back(std::move(row));
        }
        for (const WorkRow* lo : lowers)
            for (const WorkRow* up : uppers) next.push_back(combine(*lo, *up, var));
        work = std::move(next);
    }

    if (sweep_constants(work)) return result;

    // Feasible: back-substitute stage by stage in reverse order.
    std::vector<mpq_class> point(static_cast<std::size_t>(nvars), 0);
    std::vector<bool> assigned(static_cast<std::size_t>(nvars), false);
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const int var = it->var;
        bool has_lo = false, has_hi = false;
        mpq_class lo, hi;
        for (const auto& [coeffs, rhs] : it->rows) {
            const mpq_class& a = coeffs[var];
            if (a == 0) continue;
            mpq_class rest = rhs;
            for (int v = 0; v < nvars; ++v) {
                if (v == var || coeffs[v] == 0) continue;
                if (!assigned[v]) throw Defect("back-substitution order violated");
                rest -= coeffs[v] * point[v];
            }
            mpq_class bound = rest / a;
            if (a > 0) {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            }
        }
        if (has_lo && has_hi) {
            if (lo > hi) throw Defect("empty interval after feasible elimination");
            point[var] = (lo + hi) / 2;
        } else if (has_lo) {
            point[var] = lo;
        } else if (has_hi) {
            point[var] = hi;
        }
        assigned[var] = true;
    }

    for (std::size_t i = 0; i < nrows; ++i) {
        mpq_class lhs = 0;
        for (int v = 0; v < nvars; ++v) lhs += system.rows[i][v] * point[v];
        if (lhs < system.rhs[i]) throw Defect("back-substituted point violates " + system.labels[i]);
    }

    result.feasible = true;
    result.point = std::move(point);
    return result;
}

}  // namespace asdc
