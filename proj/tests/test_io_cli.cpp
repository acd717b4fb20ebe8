#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "asdc/errors.hpp"
#include "asdc/io.hpp"
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

struct RunResult {
    int exit_code;
    std::string output;
};

std::string fresh_temp_path(const char* suffix) {
    static int counter = 0;
    return "/tmp/asdc_cli_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++) + suffix;
}

// Runs the CLI binary, capturing stdout (stderr silenced).
RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string out_path = fresh_temp_path(".out");
    const std::string cmd =
        env + (env.empty() ? "" : " ") + std::string(ASDC_CLI_PATH) + " " + args + " > " +
        out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    return {WEXITSTATUS(status), buf.str()};
}

std::string write_temp(const std::string& contents) {
    const std::string path = fresh_temp_path(".json");
    std::ofstream out(path);
    out << contents;
    return path;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("29/10") == mpq_class(29, 10));
    CHECK(parse_rational("-3") == mpq_class(-3));
    CHECK(parse_rational("4/6") == mpq_class(2, 3));  // canonicalized
    CHECK(rational_to_string(mpq_class(5, 2)) == "5/2");
    CHECK(rational_to_string(mpq_class(7)) == "7");
    CHECK(has_error_code([] { parse_rational("seven"); }, errc::parse_error));
    CHECK(has_error_code([] { parse_rational("1/0"); }, errc::parse_error));
    CHECK(has_error_code([] { parse_rational(""); }, errc::parse_error));
}

TEST_CASE("complex JSON round trip") {
    const auto k = p5();
    CHECK(parse_complex_json(write_complex_json(k)) == k);

    std::mt19937 rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const auto c = random_asd(rng, n);
        CHECK(parse_complex_json(write_complex_json(c)) == c);
    }

    CHECK(has_error_code([] { parse_complex_json("{"); }, errc::parse_error));
    CHECK(has_error_code([] { parse_complex_json("{\"facets\":[]}"); }, errc::parse_error));
    CHECK(has_error_code([] { parse_complex_json("{\"n\":3,\"facets\":[[7]]}"); },
                         errc::vertex_out_of_range));
}

TEST_CASE("length JSON round trip") {
    const auto l = lv({mpq_class(29, 10), 1, 1, 1});
    const auto back = parse_lengths_json(write_lengths_json(l));
    CHECK(back.lengths() == l.lengths());
    CHECK(has_error_code([] { parse_lengths_json("{\"lengths\":[\"x\"]}"); },
                         errc::parse_error));
    CHECK(has_error_code([] { parse_lengths_json("{}"); }, errc::parse_error));
}

TEST_CASE("cycle expressions parse and format") {
    const auto k = p5();
    const auto c = parse_cycle_expression(k, "(2 3)(4 5) + 3*(2 3 4)");
    CHECK(c.degree_terms(2).size() == 2);
    CHECK(format_cycle_expression(c) == "(2 3)(4 5) + 3*(2 3 4)");

    // Non-faces vanish during parsing; constants scale the unit cycle.
    CHECK(parse_cycle_expression(k, "(1 2)").is_zero());
    CHECK(format_cycle_expression(parse_cycle_expression(k, "2 - (2 3) + (2 3)")) == "2");
    CHECK(parse_cycle_expression(k, "-(2 3) + (2 3)").is_zero());

    // Juxtaposed blocks multiply: (2 3)(2 4) shares vertex 2.
    const auto shared = parse_cycle_expression(k, "(2 3)(2 4)");
    CHECK(shared == cycle_class(k, {m1({2, 3, 4})}));

    CHECK(has_error_code([&] { parse_cycle_expression(k, "(2 3"); }, errc::parse_error));
    CHECK(has_error_code([&] { parse_cycle_expression(k, "(3)"); }, errc::parse_error));
    CHECK(has_error_code([&] { parse_cycle_expression(k, "(2 9)"); },
                         errc::vertex_out_of_range));
    CHECK(has_error_code([&] { parse_cycle_expression(k, "foo"); }, errc::parse_error));
}

TEST_CASE("CLI verdicts and exit codes") {
    const auto star_path = write_temp(R"({"n":4,"facets":[[1,4],[2,4],[3,4]]})");
    const auto half_path = write_temp(R"({"n":4,"facets":[[3,4]]})");
    const auto equal_lengths = write_temp(R"({"lengths":["1","1","1","1"]})");
    const auto bad_json = write_temp("{oops");

    auto r = run_cli("check " + star_path + " --what asd");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "true\n");

    r = run_cli("check " + half_path + " --what asd");
    CHECK(r.exit_code == 2);
    CHECK(r.output == "false\n");

    r = run_cli("check " + half_path + " --what preasd");
    CHECK(r.exit_code == 0);

    r = run_cli("check " + equal_lengths + " --what generic");
    CHECK(r.exit_code == 2);
    CHECK(r.output == "false\n");

    CHECK(run_cli("check " + bad_json + " --what asd").exit_code == 1);
    CHECK(run_cli("check " + star_path + " --what nonsense").exit_code == 1);
    CHECK(run_cli("poincare " + half_path).exit_code == 1);  // NotASD

    std::remove(star_path.c_str());
    std::remove(half_path.c_str());
    std::remove(equal_lengths.c_str());
    std::remove(bad_json.c_str());
}

TEST_CASE("CLI psi commands") {
    const auto tri_path = write_temp(R"({"n":4,"facets":[[2,3],[2,4],[3,4]]})");

    auto r = run_cli("psi " + tri_path + " --d 1,0,0,0 --method all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-1,-1,-1,agree") != std::string::npos);

    r = run_cli("psi " + tri_path + " --d 0,0,0,1 --method recursion");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0,0,0,1,1,recursion") != std::string::npos);

    // Degree mismatch is a usage error.
    CHECK(run_cli("psi " + tri_path + " --d 1,1,0,0 --method all").exit_code == 1);

    r = run_cli("psitable " + tri_path + " --method all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("disagree") == std::string::npos);

    r = run_cli("crosscheck " + tri_path);
    CHECK(r.exit_code == 0);

    std::remove(tri_path.c_str());
}

TEST_CASE("CLI structural commands emit valid JSON") {
    const auto p5_path = write_temp(R"({"n":5,"facets":[[2,3,4],[2,3,5],[2,4,5],[3,4,5]]})");

    auto r = run_cli("poincare " + p5_path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[1,1,1]") != std::string::npos);

    r = run_cli("betti " + p5_path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"euler\":3") != std::string::npos);

    r = run_cli("dual " + p5_path);
    CHECK(r.exit_code == 0);
    CHECK(parse_complex_json(r.output) == p5());

    r = run_cli("contract " + p5_path + " --face 2,3");
    CHECK(r.exit_code == 0);
    CHECK(parse_complex_json(r.output) == tri4());

    r = run_cli("flip " + p5_path + " --facet 2,3,4");
    CHECK(r.exit_code == 0);
    CHECK(parse_complex_json(r.output) == p5().flip(m1({2, 3, 4})));

    r = run_cli("enumerate 4 --mode labeled");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"count\":8") != std::string::npos);

    r = run_cli("realize " + p5_path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"realizable\":true") != std::string::npos);

    r = run_cli("chow-eval " + p5_path + " --expr \"(2 3)(4 5) + 3*(2 3 4)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"top_value\":4") != std::string::npos);

    std::remove(p5_path.c_str());
}

TEST_CASE("CLI realize reports infeasibility with exit 2") {
    const auto k = nonthreshold6();
    const auto path = write_temp(write_complex_json(k));
    const auto r = run_cli("realize " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("\"realizable\":false") != std::string::npos);
    CHECK(r.output.find("certificate") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("ASD_MAX_N overrides the resource guards") {
    // n=7 enumeration is refused by default; the environment variable can
    // also lower a guard, which keeps the override test fast.
    CHECK(run_cli("enumerate 7").exit_code == 1);

    const auto p5_path = write_temp(R"({"n":5,"facets":[[2,3,4],[2,3,5],[2,4,5],[3,4,5]]})");
    CHECK(run_cli("psi " + p5_path + " --d 2,0,0,0,0 --method ring").exit_code == 0);
    CHECK(run_cli("psi " + p5_path + " --d 2,0,0,0,0 --method ring", "ASD_MAX_N=4").exit_code ==
          1);
    std::remove(p5_path.c_str());
}
