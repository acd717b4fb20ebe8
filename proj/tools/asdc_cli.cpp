// Command-line surface over the ASD-complex library: combinatorial checks,
// duality/flips/contractions, enumeration, threshold realization, Poincare
// polynomials, Chow-ring evaluation, and psi-class intersection numbers.
//
// Exit codes: 0 success or positive verdict, 1 usage/parse/domain error,
// 2 negative verdict, 3 cross-method disagreement.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "asdc/chow.hpp"
#include "asdc/complex.hpp"
#include "asdc/errors.hpp"
#include "asdc/intersection.hpp"
#include "asdc/invariants.hpp"
#include "asdc/io.hpp"
#include "asdc/threshold.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;
constexpr int kExitDisagreement = 3;

int guard_or_env(int default_guard) {
    if (const char* env = std::getenv("ASD_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw asdc::Error(asdc::errc::parse_error, "ASD_MAX_N must be an integer");
        }
    }
    return default_guard;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw asdc::Error(asdc::errc::parse_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

asdc::Mask parse_vertex_csv(const std::string& text, int n) {
    asdc::Mask m = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v;
        try {
            v = std::stoi(item);
        } catch (const std::exception&) {
            throw asdc::Error(asdc::errc::parse_error, "bad vertex '" + item + "'");
        }
        if (v < 1 || v > n)
            throw asdc::Error(asdc::errc::vertex_out_of_range,
                              "vertex " + std::to_string(v) + " outside [1.." + std::to_string(n) + "]");
        m |= asdc::bit(v - 1);
    }
    if (m == 0) throw asdc::Error(asdc::errc::parse_error, "empty vertex list");
    return m;
}

std::vector<int> parse_exponents_csv(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw asdc::Error(asdc::errc::parse_error, "bad exponent '" + item + "'");
        }
    }
    return out;
}

std::string csv_exponent_header(int n) {
    std::string h;
    for (int i = 1; i <= n; ++i) {
        if (!h.empty()) h += ',';
        h += "d" + std::to_string(i);
    }
    return h;
}

std::string csv_exponents(const std::vector<int>& d) {
    std::string row;
    for (int e : d) {
        if (!row.empty()) row += ',';
        row += std::to_string(e);
    }
    return row;
}

int cmd_check(const std::string& path, const std::string& what) {
    bool verdict;
    if (what == "asd")
        verdict = asdc::parse_complex_json(slurp(path)).is_asd();
    else if (what == "preasd")
        verdict = asdc::parse_complex_json(slurp(path)).is_pre_asd();
    else if (what == "generic")
        verdict = asdc::is_generic(asdc::parse_lengths_json(slurp(path)));
    else
        throw asdc::Error(asdc::errc::parse_error, "--what must be asd, preasd, or generic");
    std::cout << (verdict ? "true" : "false") << "\n";
    return verdict ? kExitOk : kExitNegative;
}

int cmd_dual(const std::string& path) {
    const auto k = asdc::parse_complex_json(slurp(path));
    std::cout << asdc::write_complex_json(k.alexander_dual()) << "\n";
    return kExitOk;
}

int cmd_flip(const std::string& path, const std::string& facet) {
    const auto k = asdc::parse_complex_json(slurp(path));
    std::cout << asdc::write_complex_json(k.flip(parse_vertex_csv(facet, k.vertex_count())))
              << "\n";
    return kExitOk;
}

int cmd_contract(const std::string& path, const std::string& face) {
    const auto k = asdc::parse_complex_json(slurp(path));
    std::cout << asdc::write_complex_json(k.contract(parse_vertex_csv(face, k.vertex_count())))
              << "\n";
    return kExitOk;
}

int cmd_enumerate(int n, const std::string& mode) {
    asdc::EnumerationMode m;
    if (mode == "labeled")
        m = asdc::EnumerationMode::labeled;
    else if (mode == "classes")
        m = asdc::EnumerationMode::up_to_relabeling;
    else
        throw asdc::Error(asdc::errc::parse_error, "--mode must be labeled or classes");
    const auto list = asdc::enumerate_asd(n, m, guard_or_env(6));
    json out;
    out["n"] = n;
    out["mode"] = mode;
    out["count"] = list.size();
    json complexes = json::array();
    for (const auto& k : list) complexes.push_back(json::parse(asdc::write_complex_json(k)));
    out["complexes"] = std::move(complexes);
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_realize(const std::string& path) {
    const auto k = asdc::parse_complex_json(slurp(path));
    asdc::RealizeDiagnostics diag;
    const auto witness = asdc::realize_threshold(k, guard_or_env(8), &diag);
    json out;
    out["realizable"] = witness.has_value();
    if (witness) {
        out["lengths"] = json::parse(asdc::write_lengths_json(*witness))["lengths"];
    } else {
        json cert = json::array();
        for (std::size_t i = 0; i < diag.multipliers.size(); ++i) {
            if (diag.multipliers[i] == 0) continue;
            cert.push_back({{"constraint", diag.constraint_labels[i]},
                            {"multiplier", asdc::rational_to_string(diag.multipliers[i])}});
        }
        out["certificate"] = std::move(cert);
    }
    std::cout << out.dump() << "\n";
    return witness ? kExitOk : kExitNegative;
}

int cmd_poincare(const std::string& path) {
    const auto poly = asdc::poincare_polynomial(asdc::parse_complex_json(slurp(path)));
    json out;
    out["coeffs"] = poly.coeffs();
    out["polynomial"] = poly.pretty();
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_betti(const std::string& path) {
    const auto k = asdc::parse_complex_json(slurp(path));
    json out;
    out["betti"] = asdc::betti_numbers(k);
    out["euler"] = asdc::euler_characteristic(k);
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_psi(const std::string& path, const std::string& d_csv, const std::string& method) {
    const auto k = asdc::parse_complex_json(slurp(path));
    const int n = k.vertex_count();
    if (n > guard_or_env(9))
        throw asdc::Error(asdc::errc::too_large, "psi guarded to n <= 9 (override with ASD_MAX_N)");
    const asdc::PsiMonomial mono{parse_exponents_csv(d_csv)};
    if (method == "all") {
        const long long r = asdc::intersection_recursion(k, mono);
        const long long f = asdc::intersection_formula(k, mono);
        const long long g = asdc::intersection_ring(k, mono);
        const bool agree = r == f && f == g;
        std::cout << csv_exponent_header(n) << ",recursion,formula,ring,agreement\n"
                  << csv_exponents(mono.exponents) << "," << r << "," << f << "," << g << ","
                  << (agree ? "agree" : "disagree") << "\n";
        return agree ? kExitOk : kExitDisagreement;
    }
    long long value;
    if (method == "recursion")
        value = asdc::intersection_recursion(k, mono);
    else if (method == "formula")
        value = asdc::intersection_formula(k, mono);
    else if (method == "ring")
        value = asdc::intersection_ring(k, mono);
    else
        throw asdc::Error(asdc::errc::parse_error,
                          "--method must be recursion, formula, ring, or all");
    std::cout << csv_exponent_header(n) << ",value,method\n"
              << csv_exponents(mono.exponents) << "," << value << "," << method << "\n";
    return kExitOk;
}

int cmd_psitable(const std::string& path, const std::string& method) {
    const auto k = asdc::parse_complex_json(slurp(path));
    const int n = k.vertex_count();
    const int guard = guard_or_env(9);
    if (method == "all") {
        const auto rec = asdc::intersection_table(k, asdc::PsiMethod::recursion, guard);
        const auto form = asdc::intersection_table(k, asdc::PsiMethod::formula, guard);
        const auto ring = asdc::intersection_table(k, asdc::PsiMethod::ring, guard);
        std::cout << csv_exponent_header(n) << ",recursion,formula,ring,agreement\n";
        bool all_agree = true;
        for (const auto& [d, r] : rec) {
            const long long f = form.at(d), g = ring.at(d);
            const bool agree = r == f && f == g;
            all_agree = all_agree && agree;
            std::cout << csv_exponents(d) << "," << r << "," << f << "," << g << ","
                      << (agree ? "agree" : "disagree") << "\n";
        }
        return all_agree ? kExitOk : kExitDisagreement;
    }
    asdc::PsiMethod m;
    if (method == "recursion")
        m = asdc::PsiMethod::recursion;
    else if (method == "formula")
        m = asdc::PsiMethod::formula;
    else if (method == "ring")
        m = asdc::PsiMethod::ring;
    else
        throw asdc::Error(asdc::errc::parse_error,
                          "--method must be recursion, formula, ring, or all");
    std::cout << csv_exponent_header(n) << ",value,method\n";
    for (const auto& [d, value] : asdc::intersection_table(k, m, guard))
        std::cout << csv_exponents(d) << "," << value << "," << method << "\n";
    return kExitOk;
}

int cmd_chow_eval(const std::string& path, const std::string& expr) {
    const auto k = asdc::parse_complex_json(slurp(path));
    const auto cls = asdc::parse_cycle_expression(k, expr);
    json out;
    out["normal_form"] = asdc::format_cycle_expression(cls);
    json terms = json::array();
    for (const auto& [deg, bucket] : cls.buckets())
        for (const auto& [cycle, coeff] : bucket) {
            json blocks = json::array();
            for (asdc::Mask b : cycle.blocks()) {
                json verts = json::array();
                for (int v : asdc::mask_vertices(b)) verts.push_back(v + 1);
                blocks.push_back(std::move(verts));
            }
            terms.push_back({{"degree", deg}, {"coefficient", coeff}, {"blocks", blocks}});
        }
    out["terms"] = std::move(terms);
    const int top = k.vertex_count() - 3;
    if (cls.is_zero() || cls.homogeneous_degree() == top)
        out["top_value"] = asdc::evaluate_top(cls);
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_crosscheck(const std::string& path) {
    const auto k = asdc::parse_complex_json(slurp(path));
    const auto report = asdc::cross_check(k, guard_or_env(8));
    json out;
    out["monomials"] = report.monomials_checked;
    json rows = json::array();
    for (const auto& row : report.disagreements)
        rows.push_back({{"d", row.exponents},
                        {"recursion", row.recursion},
                        {"formula", row.formula},
                        {"ring", row.ring}});
    out["disagreements"] = std::move(rows);
    std::cout << out.dump() << "\n";
    return report.ok() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alexander self-dual complexes, their compactifications, "
                 "Chow rings, and psi-class intersection numbers"};
    app.require_subcommand(1);

    std::string path, what = "asd", mode = "labeled", method = "all", facet, face, d_csv, expr;
    int n = 0;

    auto* check = app.add_subcommand("check", "Test a property of a complex or length file");
    check->add_option("file", path)->required();
    check->add_option("--what", what, "asd | preasd | generic")->required();

    auto* dual = app.add_subcommand("dual", "Alexander dual of a complex");
    dual->add_option("file", path)->required();

    auto* flip = app.add_subcommand("flip", "Replace a facet by its complement");
    flip->add_option("file", path)->required();
    flip->add_option("--facet", facet, "comma-separated 1-based vertices")->required();

    auto* contract = app.add_subcommand("contract", "Freeze a face into one vertex");
    contract->add_option("file", path)->required();
    contract->add_option("--face", face, "comma-separated 1-based vertices")->required();

    auto* enumerate = app.add_subcommand("enumerate", "All ASD complexes on n vertices");
    enumerate->add_option("n", n)->required();
    enumerate->add_option("--mode", mode, "labeled | classes");

    auto* realize = app.add_subcommand("realize", "Find lengths realizing a complex as SHORT(L)");
    realize->add_option("file", path)->required();

    auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of an ASD complex");
    poincare->add_option("file", path)->required();

    auto* betti = app.add_subcommand("betti", "Betti numbers and Euler characteristic");
    betti->add_option("file", path)->required();

    auto* psi = app.add_subcommand("psi", "One psi-monomial intersection number");
    psi->add_option("file", path)->required();
    psi->add_option("--d", d_csv, "comma-separated exponents d1..dn")->required();
    psi->add_option("--method", method, "recursion | formula | ring | all");

    auto* psitable = app.add_subcommand("psitable", "All top psi-monomials as CSV");
    psitable->add_option("file", path)->required();
    psitable->add_option("--method", method, "recursion | formula | ring | all");

    auto* chow_eval = app.add_subcommand("chow-eval", "Reduce a perfect-cycle expression");
    chow_eval->add_option("file", path)->required();
    chow_eval->add_option("--expr", expr, "e.g. \"(1 2)(4 5) + 3*(2 3 4)\"")->required();

    auto* crosscheck = app.add_subcommand("crosscheck", "Compare all three psi methods");
    crosscheck->add_option("file", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(path, what);
        if (app.got_subcommand(dual)) return cmd_dual(path);
        if (app.got_subcommand(flip)) return cmd_flip(path, facet);
        if (app.got_subcommand(contract)) return cmd_contract(path, face);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(n, mode);
        if (app.got_subcommand(realize)) return cmd_realize(path);
        if (app.got_subcommand(poincare)) return cmd_poincare(path);
        if (app.got_subcommand(betti)) return cmd_betti(path);
        if (app.got_subcommand(psi)) return cmd_psi(path, d_csv, method);
        if (app.got_subcommand(psitable)) return cmd_psitable(path, method);
        if (app.got_subcommand(chow_eval)) return cmd_chow_eval(path, expr);
        if (app.got_subcommand(crosscheck)) return cmd_crosscheck(path);
    } catch (const asdc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
