#include "eqq/errors.hpp"
#include "eqq/grading.hpp"

#include <doctest.h>

using namespace eqq;

TEST_CASE("make_grading rewrites the zeta0 direction")
{
    CHECK(make_grading(0, 0, 1, 1) == Grading{-2, 2, 0});
    CHECK(make_grading(0, 0, 0, 0) == Grading{});
    CHECK(make_grading(2, 0, 0, 1) == gr::omega);
    CHECK(gr::omega0 + gr::omega1 == Grading{-2, 2, 0});
}

TEST_CASE("rank and fixed dimensions")
{
    CHECK(rank(gr::sigma) == 1);
    CHECK(rank(gr::omega) == 2);
    CHECK(fixed_dims(gr::omega0) == std::pair<Int, Int>{-2, 0});
    CHECK(fixed_dims(gr::sigma) == std::pair<Int, Int>{0, 0});
    for (Int p = 1; p <= 8; ++p)
        for (Int s = 0; s <= p; ++s) {
            CHECK(rank(nu(p, s)) == 2 * p - 2);
            CHECK(fixed_dims(nu(p, s)) == std::pair<Int, Int>{2 * s, 2 * (p - s)});
        }
}

TEST_CASE("gradings of the isotropic classes")
{
    CHECK(nu(4, 2) == Grading{4, 2, 0});
    CHECK(nu(3, 2) == Grading{4, 0, 1});
    CHECK(nu(3, 0) == Grading{0, 4, -3});
    CHECK(nu(3, 3) == Grading{6, -2, 3});
    for (Int p = 1; p <= 6; ++p)
        CHECK(nu(p, 0) == Grading{0, 2 * (p - 1), -p});
    CHECK_THROWS_AS(nu(3, 4), Error);
}

TEST_CASE("isotropic index of a coset")
{
    for (Int p = 1; p <= 7; ++p) {
        CHECK(s_index(p, p) == p);
        CHECK(s_index(p, p + 5) == p);
        CHECK(s_index(p, -p) == 0);
        CHECK(s_index(p, -p - 3) == 0);
        // n = 2s − p recovers s
        for (Int s = 0; s <= p; ++s)
            CHECK(s_index(p, 2 * s - p) == s);
    }
    CHECK(s_index(3, 2) == 2);
}

TEST_CASE("coset decomposition")
{
    Coset c = coset(nu(4, 2));
    CHECK(c.n == 0);
    CHECK(c.a == 4);
    CHECK(c.b == 2);
    c = coset(gr::omega);
    CHECK(c.n == 1);
    CHECK(c.a == 2);
    CHECK(c.b == 0);
    c = coset(Grading{0, 4, -3});
    CHECK(c.n == -3);
    CHECK(c.b == 4);
}

TEST_CASE("grading from rank and fixed dimensions")
{
    Grading g = grading_from_dims(8, 8, 4);
    CHECK(g == Grading{8, 0, 2});
    CHECK(to_string(g) == "8 + 2Ω₁");
    for (Int u = -4; u <= 4; ++u)
        for (Int s = -4; s <= 4; ++s)
            for (Int w = -4; w <= 4; ++w) {
                Grading x{u, s, w};
                auto [f0, f1] = fixed_dims(x);
                CHECK(grading_from_dims(rank(x), f0, f1) == x);
            }
    CHECK_THROWS_AS(grading_from_dims(3, 3, 0), Error);
    try {
        grading_from_dims(3, 3, 0);
    }
    catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parity);
    }
}

TEST_CASE("grading text round trip")
{
    CHECK(to_string(Grading{}) == "0");
    CHECK(to_string(Grading{0, 4, -3}) == "4σ - 3Ω₁");
    CHECK(parse_grading("8 + 2Ω₁") == Grading{8, 0, 2});
    CHECK(parse_grading("-3Ω₁ + 4σ") == Grading{0, 4, -3});
    CHECK(parse_grading("Ω₀") == gr::omega0);
    CHECK(parse_grading("2 + W") == gr::omega);
    for (Int u = -5; u <= 5; ++u)
        for (Int s = -5; s <= 5; ++s)
            for (Int w = -5; w <= 5; ++w)
                CHECK(parse_grading(to_string(Grading{u, s, w})) == Grading{u, s, w});
}
