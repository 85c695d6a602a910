#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "eigenroot/cli.hpp"
#include "oracles.hpp"

using namespace eigenroot;

namespace {

struct CaptureResult {
    int exit_code;
    std::string out;
};

CaptureResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    int code = -1;
    try {
        code = cli_dispatch(args);
    } catch (...) {
        std::cout.rdbuf(old);
        throw;
    }
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long count_lines(const std::string& s) {
    long n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

DifferentialOperator random_valid_operator(oracles::Rng& rng) {
    std::map<int, ExactPolynomial> terms;
    const int k = static_cast<int>(rng.integer(1, 6));
    const int equality_j = static_cast<int>(rng.integer(1, k));
    for (int j = 1; j <= k; ++j) {
        const bool present = (j == equality_j) || (j == k) || rng.integer(0, 2) != 0;
        if (!present) continue;
        int deg = static_cast<int>(rng.integer(0, j));
        if (j == equality_j) deg = j;
        if (j == k && j != equality_j && deg == j) deg = j - 1;
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i) c.push_back(rng.rational(5, 4));
        c[static_cast<std::size_t>(deg)] = rng.rational(5, 4);
        if (c[static_cast<std::size_t>(deg)] == 0) c[static_cast<std::size_t>(deg)] = Rational(1);
        terms[j] = ExactPolynomial::from_coefficients(std::move(c));
    }
    return DifferentialOperator::from_terms(std::move(terms));
}

} // namespace

TEST_CASE("operator grammar round trip on the reference fleet") {
    for (const char* text :
         {"z*D + z*D^2 + z*D^3 + z*D^4 + z*D^5", "z^2*D^2 + D^7", "z^3*D^3 + z^2*D^4 + z*D^5",
          "z*D + D^2", "-2*z*D + z^2*D^2 + D^3"}) {
        const DifferentialOperator t = parse_operator(text);
        CHECK(parse_operator(print_operator(t)) == t);
    }
}

TEST_CASE("round trip across 200 randomised operators") {
    oracles::Rng rng(1618);
    for (int trial = 0; trial < 200; ++trial) {
        const DifferentialOperator t = random_valid_operator(rng);
        if (t.empty()) continue;
        const std::string printed = print_operator(t);
        CAPTURE(printed);
        CHECK(parse_operator(printed) == t);
    }
}

TEST_CASE("grammar corner cases") {
    // Repeated D-orders accumulate.
    const auto t = parse_operator("z*D + D");
    REQUIRE(t.terms().size() == 1);
    CHECK(t.terms().at(1) ==
          ExactPolynomial::from_coefficients({Rational(1), Rational(1)}));

    // Whitespace insensitivity and optional stars.
    CHECK(parse_operator("z*D+z*D^2") == parse_operator(" z D +  z D^2 "));
    CHECK(parse_operator("2z^2D^3") == parse_operator("2*z^2*D^3"));

    // Rational coefficients and parenthesised polynomials.
    const auto p = parse_operator("(1/2 + 3*z - z^2)*D^2 + z*D");
    CHECK(p.terms().at(2) == ExactPolynomial::from_coefficients(
                                 {Rational(1, 2), Rational(3), Rational(-1)}));
}

TEST_CASE("syntax errors point at the first offending byte") {
    struct Case {
        const char* text;
        std::size_t position;
    };
    // Offsets count raw bytes, whitespace included.
    const Case cases[] = {
        {"", 0},          // empty input
        {"z*", 2},        // dangling star
        {"z^*D", 2},      // exponent missing digits
        {"2//3*D", 2},    // double slash
        {"z*D + ", 6},    // trailing separator
        {"(z", 2},        // unclosed paren
        {"q*D", 0},       // unknown token at start
        {"z*D 2", 4},     // trailing junk after a complete term
        {"z*D + q", 6},   // bad second term
    };
    for (const auto& c : cases) {
        CAPTURE(c.text);
        try {
            parse_operator(c.text);
            FAIL_CHECK("expected SyntaxError for: " << c.text);
        } catch (const SyntaxError& e) {
            CHECK(e.position() == c.position);
            CHECK_FALSE(e.expected().empty());
        }
    }
}

TEST_CASE("validation failures surface as ValidationError") {
    CHECK_THROWS_AS(parse_operator_validated("z^3*D^2"), ValidationError);
    CHECK_THROWS_AS(parse_operator_validated("D^2"), ValidationError);
    CHECK_NOTHROW(parse_operator_validated("z*D + D^2"));
}

TEST_CASE("complex literals") {
    const Complex a = parse_complex("3", 128);
    CHECK(a.real().to_double() == doctest::Approx(3.0));
    CHECK(a.imag().is_zero());
    const Complex b = parse_complex("2+2i", 128);
    CHECK(b.real().to_double() == doctest::Approx(2.0));
    CHECK(b.imag().to_double() == doctest::Approx(2.0));
    const Complex c = parse_complex("-1-3i", 128);
    CHECK(c.real().to_double() == doctest::Approx(-1.0));
    CHECK(c.imag().to_double() == doctest::Approx(-3.0));
    const Complex d = parse_complex("-i", 128);
    CHECK(d.real().is_zero());
    CHECK(d.imag().to_double() == doctest::Approx(-1.0));
    const Complex e = parse_complex("1.5-0.25i", 128);
    CHECK(e.real().to_double() == doctest::Approx(1.5));
    CHECK(e.imag().to_double() == doctest::Approx(-0.25));
}

TEST_CASE("cli: classify") {
    const auto ok = run_cli({"classify", "--op", "z^2*D^2 + D^7"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("j0=2") != std::string::npos);
    CHECK(ok.out.find("d=5/7") != std::string::npos);
    CHECK(ok.out.find("A={7}") != std::string::npos);
    CHECK(ok.out.find("jm=7") != std::string::npos);

    CHECK(run_cli({"classify", "--op", "z^3*D^2"}).exit_code == 2);
    CHECK(run_cli({"classify", "--op", "z*("}).exit_code == 2);
    CHECK(run_cli({"classify"}).exit_code == 2);  // missing --op
}

TEST_CASE("cli: eigen prints lambda and ascending coefficients") {
    const auto res = run_cli({"eigen", "--op", "z*D + D^2", "--n", "2", "--print-coeffs"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("lambda = 2") != std::string::npos);
    CHECK(res.out.find("coeffs = 1 0 1") != std::string::npos);
}

TEST_CASE("cli: collision maps to the numerical-failure exit code") {
    CHECK(run_cli({"eigen", "--op", "-2*z*D + z^2*D^2 + D^3", "--n", "2"}).exit_code == 3);
}

TEST_CASE("cli: scan emits the CSV contract") {
    const std::string csv_path = "test_scan_out.csv";
    const auto res = run_cli({"scan", "--op", "z*D + D^2", "--n-from", "10", "--n-to", "20",
                              "--csv", csv_path});
    CHECK(res.exit_code == 0);
    const std::string csv = slurp(csv_path);
    CHECK(count_lines(csv) == 12);  // header + 11 rows
    CHECK(csv.rfind("n,r,ratio,collision\n", 0) == 0);
    std::remove(csv_path.c_str());
}

TEST_CASE("cli: scan json run record round trips losslessly") {
    const std::string json_path = "test_scan_out.json";
    const auto res = run_cli({"scan", "--op", "z*D + D^2", "--n-from", "8", "--n-to", "12",
                              "--json", json_path});
    CHECK(res.exit_code == 0);
    const Json loaded = Json::parse(slurp(json_path));
    const RunRecord rec = run_record_from_json(loaded);
    CHECK(rec.schema_version == 1);
    CHECK(rec.command == "scan");
    CHECK(rec.d == "1/2");
    CHECK(to_json(rec) == loaded);
    std::remove(json_path.c_str());
}

TEST_CASE("cli: measure writes deterministic svg and csv") {
    const std::string svg_a = "test_measure_a.svg";
    const std::string svg_b = "test_measure_b.svg";
    const std::string csv_path = "test_measure.csv";
    CHECK(run_cli({"measure", "--op", "z*D + D^2", "--n", "12", "--svg", svg_a,
                   "--csv", csv_path}).exit_code == 0);
    CHECK(run_cli({"measure", "--op", "z*D + D^2", "--n", "12", "--svg", svg_b}).exit_code == 0);
    const std::string a = slurp(svg_a);
    CHECK(a == slurp(svg_b));
    CHECK(a.rfind("<?xml", 0) == 0);
    CHECK(a.find("<title>") != std::string::npos);
    CHECK(count_lines(slurp(csv_path)) == 13);  // header + 12 atoms
    std::remove(svg_a.c_str());
    std::remove(svg_b.c_str());
    std::remove(csv_path.c_str());

    // Collision at the requested degree: refused with a nonzero exit.
    CHECK(run_cli({"measure", "--op", "-2*z*D + z^2*D^2 + D^3", "--n", "2",
                   "--svg", "never_written.svg"}).exit_code == 3);
}

TEST_CASE("cli: curve with discriminant and samples") {
    const auto res = run_cli({"curve", "--op", "z*D + D^2", "--discriminant",
                              "--sample", "3", "--sample", "2+2i"});
    CHECK(res.exit_code == 0);
    const Json out = Json::parse(res.out);
    CHECK(out["curve"]["j0"] == 1);
    CHECK(out["discriminant"].size() == 2);
    CHECK(out["branch_samples"].size() == 2);

    // A sample point sitting on the discriminant is a numerical failure.
    CHECK(run_cli({"curve", "--op", "z*D + D^2", "--sample", "2i"}).exit_code == 3);
}

TEST_CASE("cli: cauchy-residual with default points") {
    const auto res = run_cli({"cauchy-residual", "--op", "z*D + D^2", "--n", "25"});
    CHECK(res.exit_code == 0);
    CHECK(count_lines(res.out) == 3);
    CHECK(res.out.find("residual = ") != std::string::npos);
}

TEST_CASE("config file keys are read and flags win") {
    const std::string cfg_path = "test_lemmas.cfg";
    write_file_atomic(cfg_path, "# comment\nseeds = 1\nthreads = 2\n");
    const auto cfg = read_config_file(cfg_path);
    CHECK(cfg.at("seeds") == "1");
    CHECK(cfg.at("threads") == "2");
    std::remove(cfg_path.c_str());
    CHECK_THROWS(read_config_file("does_not_exist.cfg"));
}

TEST_CASE("config precision floor joins the env floor") {
    set_runtime_precision_floor(512);
    CHECK(env_precision_floor() >= 512);
    const RootSet rs = find_roots(
        ExactPolynomial::from_coefficients({Rational(1), Rational(0), Rational(1)}));
    CHECK(rs.precision_used >= 512);
    set_runtime_precision_floor(0);
}
