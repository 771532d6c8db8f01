#include "eqq/expr.hpp"
#include "eqq/grassmann.hpp"
#include "eqq/identities.hpp"

#include <doctest.h>

#include <random>

using namespace eqq;

namespace {

Int binom(Int n, Int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Int r = 1;
    for (Int t = 1; t <= k; ++t)
        r = r * (n - k + t) / t;
    return r;
}

// Monomials of degree k with an even number of sign variables.
Int even_count(grass::RepC2 r, Int k)
{
    Int total = 0;
    for (Int j = 0; j <= k; j += 2)
        total += (r.nminus == 0 ? (j == 0) : binom(r.nminus + j - 1, j)) * (r.nplus == 0 ? (k - j == 0) : binom(r.nplus + k - j - 1, k - j));
    return total;
}

QElem g(const std::string& text) { return std::get<QElem>(evaluate(text, Space{Space::Kind::Grass, 3, 0})); }

}  // namespace

TEST_CASE("symmetric powers of representations")
{
    CHECK(grass::sym_power({2, 0}, 3) == grass::RepC2{4, 0});
    CHECK(grass::sym_power({1, 1}, 3) == grass::RepC2{2, 2});
    for (Int a = 0; a <= 3; ++a)
        for (Int b = 0; b <= 3; ++b)
            if (a + b > 0)
                CHECK(grass::sym_power({a, b}, 1) == grass::RepC2{a, b});
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        grass::RepC2 r{Int(rng() % 4), Int(rng() % 4)};
        if (r.rank() == 0)
            continue;
        Int k = Int(rng() % 5) + 1;
        auto s = grass::sym_power(r, k);
        CHECK(s.rank() == binom(r.rank() + k - 1, k));
        CHECK(s.nplus == even_count(r, k));
    }
}

TEST_CASE("grading of the cubic bundle")
{
    Grading gr3 = grass::sym3_grading();
    CHECK(gr3 == Grading{8, 0, 2});
    CHECK(rank(gr3) == 8);
    CHECK(fixed_dims(gr3) == std::pair<Int, Int>{8, 4});
}

TEST_CASE("Euler classes of the tautological bundle")
{
    auto [cg, cxg] = grass::tautological_euler();
    CHECK(cg == quad::m_class(3, 2));
    CHECK(cxg == g("z1^2 m[0]"));
    CHECK(quad::grading(cg) == Grading{4, 0, 1});
    CHECK(quad::grading(cxg) == Grading{0, 4, -1});
    CHECK(g("cxg") == g("(1-kappa) z0^2 cg + e^2 cxl"));
    CHECK(g("z1 (cxl^2 - z0 m[1])") == g("cxg"));
}

TEST_CASE("derivation of the second Euler class")
{
    auto c = grass::cxg_relation_check();
    CHECK(c.ok);
    CHECK(c.trace.size() == 7);
    CHECK_FALSE(grass::cxg_relation_check(2).ok);
    auto pres = grass::presentation_check();
    for (auto& line : pres.trace)
        if (line.find("FAILED") != std::string::npos)
            FAIL_CHECK(line);
    CHECK(pres.ok);
}

TEST_CASE("Chern root expansion of the cubic Euler class")
{
    auto e = grass::sym_euler_in_chern(3);
    std::map<std::pair<Int, Int>, Int> got(e.begin(), e.end());
    CHECK(got == std::map<std::pair<Int, Int>, Int>{{{2, 1}, 18}, {{0, 2}, 9}});
    // rank-2 Sym¹ is the bundle itself: Euler class c₂
    auto e1 = grass::sym_euler_in_chern(1);
    CHECK(e1.size() == 1);
    CHECK(e1[0] == std::pair<std::pair<Int, Int>, Int>{{0, 1}, 1});
}

TEST_CASE("the 27 lines")
{
    auto r = grass::euler_sym3();
    CHECK(r.monomial == QMonomial{-1, 0, 1, 1, 2});
    CHECK(r.alpha == Burnside{3, 12});
    CHECK(grass::to_string(r.value) == "(3 + 12g) z0^-1 cl cxl m[2]");
    CHECK(noneq::to_string(r.rho_target) == "27 c^2 m0");
    CHECK(fixedring::to_string(r.fixed_target) == "(0 | 3 c^2)");
    // recomputed from the answer, not read back from the targets
    CHECK(rho_quadric(r.value) == r.rho_target);
    FixedElem f = fixed_quadric(r.value);
    CHECK(f.comp0 == r.fixed_target.comp0);
    CHECK(f.comp1 == r.fixed_target.comp1);
    auto rep = grass::lines_report(r);
    CHECK(rep.type_i == 0);
    CHECK(rep.type_ii == 3);
    CHECK(rep.type_iii == 0);
    CHECK(rep.type_iv == 12);
    CHECK(rep.total == 27);
    CHECK(rep.c2_set == "12[C₂/e] + 3[C₂/C₂]");
}
