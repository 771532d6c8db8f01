#include "eqq/errors.hpp"
#include "eqq/expr.hpp"
#include "eqq/identities.hpp"
#include "eqq/quadric.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace eqq;
using namespace eqq::oracle;

namespace {

QElem q(Int p, const std::string& text) { return ident::eval_quadric(p, text); }

QElem raw(Int p, QMonomial m) { return quad::reduce(p, {{HElem(1), m}}); }

}  // namespace

TEST_CASE("coset bases have 2p elements")
{
    for (Int p = 1; p <= 6; ++p)
        for (Int n = -2 * p - 3; n <= 2 * p + 3; ++n) {
            auto b = quad::basis(p, n);
            CHECK(Int(b.size()) == 2 * p);
            for (auto& m : b) {
                CHECK(coset_of(p, m) == n);
                CHECK(quad::is_basis_monomial(p, m));
            }
            std::vector<QMonomial> sorted = b;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        }
}

TEST_CASE("six-element basis of the Grassmannian coset")
{
    auto b = quad::basis(3, 2);
    std::vector<QMonomial> want{{0, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 0}, {0, 1, 0, 0, 2}, {0, 0, 1, 0, 2}, {-1, 0, 1, 1, 2}};
    CHECK(b == want);
    std::vector<std::string> gradings;
    for (auto& m : b)
        gradings.push_back(to_string(grading_of(3, m)));
    CHECK(gradings == std::vector<std::string>{"2Ω₁", "2 + 2Ω₁", "4 + 2Ω₁", "4 + 2Ω₁", "6 + 2Ω₁", "8 + 2Ω₁"});
}

TEST_CASE("RO(C2)-graded bases for p = 4 and p = 5")
{
    using Pos = std::pair<Int, Int>;
    const std::map<Int, std::vector<Pos>> positions{
        {4, {{0, 0}, {0, 2}, {2, 2}, {2, 4}, {4, 2}, {4, 4}, {6, 4}, {6, 6}}},
        {5, {{0, 0}, {0, 2}, {2, 2}, {2, 4}, {4, 4}, {4, 4}, {6, 4}, {6, 6}, {8, 6}, {8, 8}}},
    };
    for (auto& [p, pos] : positions) {
        CAPTURE(p);
        auto entries = quad::ro2_basis(p);
        REQUIRE(entries.size() == size_t(2 * p));
        std::vector<Pos> got;
        std::vector<QElem> forms;
        for (auto& e : entries) {
            got.push_back({e.a, e.b});
            forms.push_back(raw(p, e.mono));
            Grading g = grading_of(p, e.mono);
            CHECK(g == Grading{e.a, e.b, 0});
        }
        std::sort(got.begin(), got.end());
        CHECK(got == pos);
        // same elements as the listed ones, up to order
        for (auto& text : listed_ro2(p)) {
            CAPTURE(text);
            CHECK(std::count(forms.begin(), forms.end(), q(p, text)) == 1);
        }
    }
    // the two elements sharing 4 + 4σ when p = 5
    auto five = quad::ro2_basis(5);
    std::vector<QElem> shared;
    for (auto& e : five)
        if (e.a == 4 && e.b == 4)
            shared.push_back(raw(5, e.mono));
    CHECK(shared.size() == 2);
    CHECK(std::count(shared.begin(), shared.end(), q(5, "cw^2 cxw^2")) == 1);
    CHECK(std::count(shared.begin(), shared.end(), q(5, "z1 m[2]")) == 1);
    CHECK(q(4, "z0 cw^2 cxw") == q(4, "z0^2 m[3] + xi m[2]"));
}

TEST_CASE("gradings of the m-classes")
{
    CHECK(grading_of(4, QMonomial{0, 0, 0, 0, 2}) == Grading{4, 2, 0});
    CHECK(grading_of(3, QMonomial{0, 0, 0, 0, 3}) == Grading{6, -2, 3});
    for (Int p = 1; p <= 6; ++p)
        CHECK(grading_of(p, QMonomial{0, 0, 0, 0, 0}) == Grading{0, 2 * (p - 1), -p});
}

TEST_CASE("defining relations, all p up to 6")
{
    for (Int p = 1; p <= 6; ++p) {
        auto c = ident::relations(p);
        for (auto& line : c.trace)
            if (line.find("FAILED") != std::string::npos)
                FAIL_CHECK(line);
        CHECK(c.ok);
    }
}

TEST_CASE("squares of the middle classes")
{
    // p odd: m_s² = ζ₁^{-1}ĉ^sĉ_χ^s m_s and (ζ₁m_s)² = (1−κ)ζ₀ĉ^{s+1}ĉ_χ^{s−1}m_s + e²ĉ^sĉ_χ^{s−1}m_s with s = ⌊p/2⌋
    for (Int p : {3, 5}) {
        Int s = p / 2;
        std::string m = "m[" + std::to_string(s) + "]";
        CHECK(q(p, m + "^2") == q(p, "z1^-1 " + pw("cw", s) + " " + pw("cxw", s) + " " + m));
        CHECK(q(p, "(z1 " + m + ")^2") == q(p, "(1-kappa) z0 " + pw("cw", s + 1) + " " + pw("cxw", s - 1) + " " + m + " + e^2 " +
                                                   pw("cw", s) + " " + pw("cxw", s - 1) + " " + m));
    }
    CHECK(quad::to_string(q(5, "(z1 m[2])^2")) == "(1-kappa) z0 cw^3 cxw m[2] + e^2 cw^2 cxw m[2]");
    CHECK(q(5, "m[3]^2") == q(5, "z0^-1 cw^2 cxw^2 m[3]"));
    for (Int p = 2; p <= 6; p += 2)
        CHECK(q(p, "m[" + std::to_string(p / 2) + "]^2").is_zero());
}

TEST_CASE("zeta division")
{
    CHECK(quad::divide(q(3, "z0 m[3]"), quad::Zeta::Z0, 1) == q(3, "m[3]"));
    for (Int p = 1; p <= 5; ++p)
        for (Int s = 0; s <= p; ++s) {
            QElem top = raw(p, {0, 0, p - s, 0, s});
            QElem d = quad::divide(top, quad::Zeta::Z0, 1);
            CHECK(d == raw(p, {-1, 0, p - s, 0, s}));
            CHECK(quad::mul(quad::zeta_power(p, quad::Zeta::Z0, 1), d) == top);
            QElem side = raw(p, {0, 0, 0, s, s});
            QElem d2 = quad::divide(side, quad::Zeta::Z1, 2);
            CHECK(d2 == raw(p, {0, -2, 0, s, s}));
            CHECK(quad::mul(quad::zeta_power(p, quad::Zeta::Z1, 2), d2) == side);
        }
    try {
        quad::divide(q(3, "cw m[1]"), quad::Zeta::Z0, 1);
        FAIL("expected NotDivisible");
    }
    catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDivisible);
    }
}

TEST_CASE("homogeneity")
{
    CHECK(quad::grading(q(3, "z0^-1 cw cxw m[2]")) == Grading{8, 0, 2});
    CHECK_FALSE(quad::is_homogeneous(q(3, "1 + cw")));
    CHECK_THROWS_AS(quad::grading(quad::zero(3)), Error);
}
