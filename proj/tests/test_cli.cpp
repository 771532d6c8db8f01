#include "eqq/commands.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

fs::path scratch()
{
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("eqq_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        ::setenv("EQQ_CACHE_DIR", (d / "cache").c_str(), 1);
        ::setenv("EQQ_CONFIG", (d / "absent.conf").c_str(), 1);
        return d;
    }();
    return dir;
}

Run eqq_run(std::vector<std::string> args, const std::string& input = "")
{
    scratch();
    args.insert(args.begin(), "eqq");
    std::vector<const char*> argv;
    for (auto& a : args)
        argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = eqq::run_cli(int(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);)
        v.push_back(l);
    return v;
}

// Glyph drawn at lattice point (a, b) of a text chart whose leftmost column is a = a0.
char glyph_at(const std::string& chart, long a, long b, long a0)
{
    for (auto& l : lines_of(chart)) {
        if (l.size() < 5)
            continue;
        try {
            size_t used = 0;
            long row = std::stol(l.substr(0, 4), &used);
            if (row != b)
                continue;
        }
        catch (...) {
            continue;
        }
        size_t col = 5 + size_t(2 * (a - a0));
        return col < l.size() ? l[col] : ' ';
    }
    return '?';
}

}  // namespace

TEST_CASE("exit codes")
{
    CHECK(eqq_run({"--space", "quadric:3", "normalize", "m[1] m[2]"}).code == 0);
    CHECK(eqq_run({}).code == 1);
    CHECK(eqq_run({"--format", "yaml", "--space", "point", "normalize", "e"}).code == 1);
    auto unknown = eqq_run({"--space", "quadric:3", "normalize", "q1"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("UnknownGenerator") != std::string::npos);
    CHECK(unknown.err.find("cxw") != std::string::npos);
    CHECK(eqq_run({"--space", "quadric:3", "normalize", "(m[1]"}).code == 2);
    CHECK(eqq_run({"--space", "grass", "normalize", "cw"}).code == 2);
    CHECK(eqq_run({"--space", "quadric:3", "normalize", "m[7]"}).code == 3);
    CHECK(eqq_run({"--space", "quadric:3", "divide", "cw", "--by", "z0", "--k", "1"}).code == 3);
    CHECK(eqq_run({"--space", "proj:2|1", "restrict", "cw"}).code == 3);
    CHECK(eqq_run({"--space", "quadric:3", "mul", "m[1]", "m[1]"}).code == 0);
    CHECK(eqq_run({"--space", "quadric:3", "normalize", "--", "-m[1]"}).code == 0);
}

TEST_CASE("normal forms and gradings through the command line")
{
    auto r = eqq_run({"--space", "quadric:5", "normalize", "(z1 m[2])^2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "(1-kappa) z0 cw^3 cxw m[2] + e^2 cw^2 cxw m[2]\n");
    auto g = eqq_run({"--space", "quadric:3", "grading", "z0 m[1]"});
    CHECK(g.out == "4σ - 2Ω₁\n");
    auto d = eqq_run({"--space", "quadric:3", "divide", "z0 m[3]", "--by", "z0", "--k", "1"});
    CHECK(d.out == "m[3]\n");
    auto prod = eqq_run({"--space", "quadric:4", "mul", "z0", "cw", "cxw"});
    auto same = eqq_run({"--space", "quadric:4", "normalize", "z0 cw cxw"});
    CHECK(prod.out == same.out);
    auto lines = eqq_run({"lines27"});
    CHECK(lines.code == 0);
    CHECK(lines.out.find("(3 + 12g) z0^-1 cl cxl m[2]") != std::string::npos);
    CHECK(lines.out.find("total 27") != std::string::npos);
    auto ids = eqq_run({"--space", "quadric:4", "check-identities"});
    CHECK(ids.code == 0);
    CHECK(ids.out.find("ok") != std::string::npos);
}

TEST_CASE("json output follows the documented shape")
{
    auto r = eqq_run({"--format", "json", "--space", "quadric:3", "normalize", "m[1]^2 + 2 z0 cw"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("space") == "quadric:3");
    CHECK(j.at("text").is_string());
    REQUIRE(j.at("terms").is_array());
    CHECK(j.at("terms").size() == 2);
    for (auto& t : j.at("terms")) {
        CHECK(t.at("coeff").at("symbol").is_string());
        auto& m = t.at("monomial");
        for (const char* k : {"a", "b", "i", "j"})
            CHECK(m.at(k).is_number_integer());
        CHECK((m.at("m").is_null() || m.at("m").is_number_integer()));
    }
    // mixed gradings have no single grading
    CHECK(j.at("grading").is_null());

    auto hom = nlohmann::json::parse(eqq_run({"--format", "json", "--space", "quadric:3", "normalize", "m[1]^2"}).out);
    CHECK(hom.at("grading") == nlohmann::json{{"u", 4}, {"s", 4}, {"w", -2}});

    auto pt = nlohmann::json::parse(eqq_run({"--format", "json", "--space", "point", "normalize", "3+12g"}).out);
    CHECK(pt.at("terms").at(0).at("coeff").at("value") == nlohmann::json{{"a", 3}, {"b", 12}});
    CHECK(pt.at("terms").at(0).at("monomial").is_null());
}

TEST_CASE("config file supplies defaults that flags override")
{
    fs::path cfg = scratch() / "eqq.conf";
    std::ofstream(cfg) << "# defaults\nspace = quadric:3\nformat = json\n";
    auto r = eqq_run({"--config", cfg.string(), "normalize", "m[1]^2"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("space") == "quadric:3");
    auto over = eqq_run({"--config", cfg.string(), "--format", "text", "--space", "quadric:5", "normalize", "m[2] z1"});
    CHECK(over.out == "z1 m[2]\n");
    CHECK(eqq_run({"--config", (scratch() / "missing.conf").string(), "normalize", "1"}).code == 1);
    CHECK(eqq_run({"normalize", "m[1]"}).code == 1);  // no space anywhere

    ::setenv("EQQ_CONFIG", cfg.c_str(), 1);
    CHECK(nlohmann::json::parse(eqq_run({"normalize", "m[1]^2"}).out).at("space") == "quadric:3");
    ::setenv("EQQ_CONFIG", (scratch() / "absent.conf").c_str(), 1);
}

TEST_CASE("a dash reads the expression from standard input")
{
    auto r = eqq_run({"--space", "quadric:5", "normalize", "-"}, "(z1 m[2])^2\n");
    CHECK(r.code == 0);
    CHECK(r.out == "(1-kappa) z0 cw^3 cxw m[2] + e^2 cw^2 cxw m[2]\n");
}

TEST_CASE("diagrams")
{
    auto five = eqq_run({"diagram", "ro2-basis", "5"});
    REQUIRE(five.code == 0);
    CHECK(glyph_at(five.out, 4, 4, 0) == '@');
    CHECK(glyph_at(five.out, 2, 2, 0) == '*');
    CHECK(glyph_at(five.out, 3, 3, 0) == '.');
    CHECK(five.out.find("(4,4)  cw^2 cxw^2  z1 m[2]") != std::string::npos);

    auto four = eqq_run({"diagram", "ro2-basis", "4"});
    CHECK(glyph_at(four.out, 4, 2, 0) == '*');
    CHECK(four.out.find("(4,2)  m[2]") != std::string::npos);
    CHECK(eqq_run({"ro2-basis", "4"}).out.find("m[2]") != std::string::npos);

    auto chart = eqq_run({"diagram", "hpoint-chart", "6"});
    REQUIRE(chart.code == 0);
    CHECK(glyph_at(chart.out, 0, 0, -6) == '#');
    for (long k : {2, 4, 6})
        CHECK(glyph_at(chart.out, k, -k, -6) == '*');
    CHECK(glyph_at(chart.out, 3, -3, -6) == 'o');
    CHECK(glyph_at(chart.out, 0, 3, -6) == '*');

    auto svg = eqq_run({"--format", "svg", "diagram", "ro2-basis", "5"});
    CHECK(svg.out.rfind("<svg", 0) == 0);
    CHECK(svg.out.find("class=\"double\"") != std::string::npos);
    CHECK(svg.out.find("</svg>") != std::string::npos);
    auto hsvg = eqq_run({"--format", "svg", "diagram", "hpoint-chart"});
    CHECK(hsvg.out.find("class=\"burnside\"") != std::string::npos);
    CHECK(eqq_run({"diagram", "nonsense"}).code != 0);
}

TEST_CASE("basis listing")
{
    auto r = eqq_run({"--space", "quadric:3", "basis", "--coset", "2"});
    REQUIRE(r.code == 0);
    CHECK(lines_of(r.out).size() >= 6);
    auto p = eqq_run({"--space", "proj:2|1", "basis", "--coset", "0"});
    CHECK(p.code == 0);
    CHECK(lines_of(p.out).size() == 3);
}
