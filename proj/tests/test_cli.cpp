#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sea/algebra_file.hpp"
#include "sea/cli.hpp"
#include "sea/construct.hpp"

using namespace sea;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& tag, const std::string& content) {
    const std::string path = "cli_test_" + tag + ".tmp";
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("parsing the grammar") {
    const auto c3 = parse_algebra("algebra C3\nelements 0 a 1\nsum a a = 1\n");
    CHECK(c3.name == "C3");
    CHECK(c3.algebra.size() == 3);
    CHECK(check_effect_axioms(c3.algebra).pass());
    CHECK_FALSE(c3.product.has_value());

    // implicit sums only: C2
    const auto c2 = parse_algebra("elements 0 1\n");
    CHECK(c2.algebra.size() == 2);
    CHECK(check_effect_axioms(c2.algebra).pass());

    // comments and blank lines are ignored
    const auto commented =
        parse_algebra("# header\nalgebra X\n\nelements 0 a 1  # inline\nsum a a = 1\n");
    CHECK(commented.algebra.size() == 3);
}

TEST_CASE("parse errors carry line numbers") {
    const auto expect_line = [](const std::string& text, int line) {
        try {
            parse_algebra(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_number == line);
        }
    };

    expect_line("algebra X\nelements 0 a 1\nsum a a = 1\nsum a a = 0\n", 4);
    expect_line("algebra X\nelements 0 a 1\nsum a b = 1\n", 3);   // undeclared
    expect_line("algebra X\nelements 0 a b\n", 2);                // missing 1
    expect_line("algebra X\nelements a 1\n", 2);                  // missing 0
    expect_line("algebra X\nelements 0 a a 1\n", 2);              // duplicate
    expect_line("nonsense\n", 1);
    expect_line("algebra X\nelements 0 1\nsum 0 1\n", 3);         // malformed
}

TEST_CASE("prod tables parse and must be total") {
    std::string text = "elements 0 1\n";
    text += "prod 0 0 = 0\nprod 0 1 = 0\nprod 1 0 = 0\nprod 1 1 = 1\n";
    const auto parsed = parse_algebra(text);
    REQUIRE(parsed.product.has_value());
    CHECK(check_sea_axioms(parsed.algebra, *parsed.product).pass());

    CHECK_THROWS_AS(parse_algebra("elements 0 1\nprod 0 0 = 0\n"), ParseError);
}

TEST_CASE("round trip: parse, serialize, parse") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        // random catalog member, occasionally with its product table
        FiniteEffectAlgebra ea = [&]() -> FiniteEffectAlgebra {
            switch (rng() % 4) {
                case 0: return catalog_chain(1 + int(rng() % 4));
                case 1: return catalog_boolean(1 + int(rng() % 3));
                case 2: return catalog_diamond();
                default:
                    return cartesian_product({catalog_chain(1 + int(rng() % 2)),
                                              catalog_chain(1 + int(rng() % 2))})
                        .algebra;
            }
        }();
        AlgebraFile file{ea.name(), ea, std::nullopt};
        if (is_boolean_algebra(ea) && rng() % 2) file.product = meet_product(ea);

        const std::string once = serialize_algebra(file);
        const auto reparsed = parse_algebra(once);
        CHECK(serialize_algebra(reparsed) == once);
        CHECK(reparsed.algebra.size() == ea.size());
        CHECK(reparsed.product.has_value() == file.product.has_value());
        CHECK(check_effect_axioms(reparsed.algebra).pass());
    }
}

TEST_CASE("check command exit codes") {
    const auto good = temp_file("good", "elements 0 a 1\nsum a a = 1\n");
    CHECK(run({"check", good}).code == 0);

    const auto bad = temp_file("bad", "elements 0 a 1\nsum a 1 = a\nsum a a = 1\n");
    const auto result = run({"check", bad});
    CHECK(result.code == 1);
    CHECK(result.out.find("[FAIL] A4") != std::string::npos);

    const auto broken = temp_file("broken", "elements 0 a 1\nsum a a = 1\nsum a a = 0\n");
    CHECK(run({"check", broken}).code == 2);
    CHECK(run({"check", "does_not_exist.ea"}).code == 2);
    CHECK(run({"bogus-subcommand"}).code == 2);

    for (const auto& f : {good, bad, broken}) std::remove(f.c_str());
}

TEST_CASE("solve command with expectations") {
    const auto c3 = temp_file("solve_c3", "elements 0 a 1\nsum a a = 1\n");
    CHECK(run({"solve", c3, "--expect", "none"}).code == 0);
    CHECK(run({"solve", c3, "--expect", "unique"}).code == 1);
    CHECK(run({"solve", c3, "--expect", "nonsense"}).code == 2);
    std::remove(c3.c_str());
}

TEST_CASE("sharp and quotient commands") {
    const auto b4 = temp_file("sharp_b4", serialize_algebra({"B4", catalog_boolean(2),
                                                             std::nullopt}));
    const auto result = run({"sharp", b4});
    CHECK(result.code == 0);
    CHECK(result.out.find("\"x\"") != std::string::npos);
    std::remove(b4.c_str());

    const auto with_prod = temp_file(
        "quot_b4",
        serialize_algebra({"B4", catalog_boolean(2), meet_product(catalog_boolean(2))}));
    const auto q = run({"quotient", with_prod, "--a", "x", "--b", "1"});
    CHECK(q.code == 0);
    CHECK(q.out.find("x/1 = x") != std::string::npos);
    // incomparable pair is a semantic error
    CHECK(run({"quotient", with_prod, "--a", "x", "--b", "y"}).code == 1);
    std::remove(with_prod.c_str());
}

TEST_CASE("construct command writes loadable files") {
    const auto result = run({"construct", "diamond"});
    CHECK(result.code == 0);
    const auto parsed = parse_algebra(result.out.substr(result.out.find("algebra")));
    CHECK(parsed.algebra.size() == 4);

    const std::string out_path = "cli_test_out.ea";
    CHECK(run({"construct", "chain", "--n", "3", "-o", out_path}).code == 0);
    const auto chain = load_algebra_file(out_path);
    CHECK(chain.algebra.size() == 5);
    CHECK(check_effect_axioms(chain.algebra).pass());
    std::remove(out_path.c_str());

    CHECK(run({"construct", "widget"}).code == 2);
    CHECK(run({"construct", "interval"}).code == 2);  // missing --file/--top
}

TEST_CASE("json reports are deterministic modulo the timestamp") {
    const auto c3 = temp_file("det_c3", "elements 0 a 1\nsum a a = 1\n");
    const std::string j1 = "cli_test_r1.json", j2 = "cli_test_r2.json";
    REQUIRE(run({"check", c3, "--json", j1}).code == 0);
    REQUIRE(run({"check", c3, "--json", j2}).code == 0);

    const auto load = [](const std::string& p) {
        std::ifstream f(p);
        return nlohmann::ordered_json::parse(f);
    };
    auto a = load(j1), b = load(j2);
    CHECK(a.at("schema") == 1);
    CHECK(a.at("inputs").at("digest") == b.at("inputs").at("digest"));
    a.erase("timestamp");
    b.erase("timestamp");
    CHECK(a.dump() == b.dump());

    std::remove(c3.c_str());
    std::remove(j1.c_str());
    std::remove(j2.c_str());
}

TEST_CASE("seed changes the digest, content does too") {
    const auto c3 = temp_file("dig_c3", "elements 0 a 1\nsum a a = 1\n");
    const std::string j1 = "cli_test_d1.json", j2 = "cli_test_d2.json",
                      j3 = "cli_test_d3.json";
    REQUIRE(run({"order", "--model", "boolean", "--suite", "quotient", "--seed",
                 "1", "--json", j1})
                .code == 0);
    REQUIRE(run({"order", "--model", "boolean", "--suite", "quotient", "--seed",
                 "2", "--json", j2})
                .code == 0);
    const auto load = [](const std::string& p) {
        std::ifstream f(p);
        return nlohmann::ordered_json::parse(f);
    };
    CHECK(load(j1).at("inputs").at("digest") != load(j2).at("inputs").at("digest"));
    std::remove(c3.c_str());
    std::remove(j1.c_str());
    std::remove(j2.c_str());
    std::remove(j3.c_str());
}

TEST_CASE("hilbert and fuzzy subcommands run end to end") {
    CHECK(run({"hilbert", "--dim", "2", "--samples", "20", "--suite", "axioms"}).code == 0);
    CHECK(run({"fuzzy", "--suite", "probe", "--nmax", "6"}).code == 0);
    CHECK(run({"fuzzy", "--suite", "poly"}).code == 0);
    CHECK(run({"order", "--model", "omega", "--suite", "cond1"}).code == 0);
    CHECK(run({"order", "--model", "omega", "--suite", "cond1", "--expect", "pass"}).code == 1);
    CHECK(run({"order", "--model", "omega", "--suite", "interval"}).code == 2);
}
