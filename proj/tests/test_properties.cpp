#include "eqq/cache.hpp"
#include "eqq/errors.hpp"
#include "eqq/expr.hpp"
#include "eqq/quadric.hpp"
#include "eqq/restrict.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace eqq;

using namespace eqq::gen;


TEST_CASE("rewriting is confluent: every rule order gives one normal form")
{
    Rng rng(2024);
    for (Int p = 1; p <= 6; ++p)
        for (bool grass : {false, true}) {
            if (grass && p != 3)
                continue;
            Space sp{grass ? Space::Kind::Grass : Space::Kind::Quadric, p, 0};
            CAPTURE(to_string(sp));
            for (int t = 0; t < 500; ++t) {
                std::string text = random_expression(rng, p, grass);
                CAPTURE(text);
                Value first = evaluate(text, sp, strategies[0]);
                for (auto& how : strategies)
                    CHECK(std::get<QElem>(evaluate(text, sp, how)) == std::get<QElem>(first));
            }
        }
}

TEST_CASE("one-shot reduction agrees with stepwise multiplication")
{
    Rng rng(77);
    for (Int p = 1; p <= 6; ++p)
        for (int t = 0; t < 500; ++t) {
            QElem x = random_basis_element(rng, p), y = random_basis_element(rng, p), z = random_basis_element(rng, p);
            auto raw = [](const QElem& e) {
                QRaw r;
                for (auto& [m, c] : e.terms)
                    r.push_back({c, m});
                return r;
            };
            for (auto& how : strategies) {
                QRaw xyz = quad::raw_product(p, quad::raw_product(p, raw(x), raw(y), how), raw(z), how);
                CHECK(quad::reduce(p, xyz, how) == quad::mul(quad::mul(x, y), z));
            }
        }
}

TEST_CASE("ring axioms, grading additivity and idempotent reduction")
{
    Rng rng(99);
    for (Int p = 1; p <= 6; ++p)
        for (int t = 0; t < 500; ++t) {
            QElem x = random_basis_element(rng, p), y = random_basis_element(rng, p), z = random_basis_element(rng, p);
            QElem xy = quad::mul(x, y);
            CHECK(xy == quad::mul(y, x));
            CHECK(quad::mul(xy, z) == quad::mul(x, quad::mul(y, z)));
            CHECK(quad::mul(x, quad::add(y, z)) == quad::add(xy, quad::mul(x, z)));
            if (!xy.is_zero())
                CHECK(quad::grading(xy) == quad::grading(x) + quad::grading(y));
            QRaw again;
            for (auto& [m, c] : xy.terms) {
                again.push_back({c, m});
                CHECK(quad::is_basis_monomial(p, m));
            }
            CHECK(quad::reduce(p, again) == xy);
        }
}

TEST_CASE("division undoes multiplication by zeta powers")
{
    Rng rng(13);
    for (Int p = 1; p <= 5; ++p)
        for (int t = 0; t < 300; ++t) {
            QElem y = quad::add(random_basis_element(rng, p), random_basis_element(rng, p));
            auto which = pick(rng, 0, 1) ? quad::Zeta::Z0 : quad::Zeta::Z1;
            Int k = pick(rng, 1, 3);
            QElem power = quad::zeta_power(p, which, k);
            QElem x = quad::mul(power, y);
            QElem d;
            REQUIRE_NOTHROW(d = quad::divide(x, which, k));
            CHECK(quad::mul(power, d) == x);
            // divided classes multiplied back
            auto b = quad::basis(p, pick(rng, -2 * p, 2 * p));
            QElem m = quad::monomial(p, b[size_t(pick(rng, 0, 2 * p - 1))]);
            try {
                QElem dm = quad::divide(m, which, k);
                CHECK(quad::mul(power, dm) == m);
            }
            catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::NotDivisible);
            }
        }
}

TEST_CASE("render then parse returns the element")
{
    Rng rng(31);
    for (Int p = 1; p <= 6; ++p) {
        Space sp{Space::Kind::Quadric, p, 0};
        for (Int n = -2 * p - 2; n <= 2 * p + 2; ++n)
            for (auto& m : quad::basis(p, n)) {
                QElem x = quad::monomial(p, m, random_homogeneous_coeff(rng));
                std::string text = render(x, sp);
                CAPTURE(text);
                CHECK(std::get<QElem>(evaluate(text, sp)) == x);
                QElem plain = quad::monomial(p, m);
                CHECK(std::get<QElem>(evaluate(render(plain, sp), sp)) == plain);
            }
        for (int t = 0; t < 200; ++t) {
            std::string text = random_expression(rng, p, false);
            QElem x = std::get<QElem>(evaluate(text, sp));
            CAPTURE(text);
            CHECK(std::get<QElem>(evaluate(render(x, sp), sp)) == x);
        }
    }
    Space g{Space::Kind::Grass, 3, 0};
    for (int t = 0; t < 300; ++t) {
        QElem x = std::get<QElem>(evaluate(random_expression(rng, 3, true), g));
        CHECK(std::get<QElem>(evaluate(render(x, g), g)) == x);
    }
    for (Int pp = 0; pp <= 3; ++pp)
        for (Int qq = 0; qq <= 3; ++qq) {
            if (pp + qq == 0)
                continue;
            Space sp{Space::Kind::Proj, pp, qq};
            for (Int n = -5; n <= 5; ++n)
                for (auto& m : proj::basis(pp, qq, n)) {
                    ProjElem x = proj::monomial({pp, qq}, m, random_homogeneous_coeff(rng));
                    CHECK(std::get<ProjElem>(evaluate(render(x, sp), sp)) == x);
                }
        }
    Space point{Space::Kind::Point, 0, 0};
    for (const char* text : {"e^2", "xi^3", "e xi^2", "e^-2 kappa", "-e^-1 kappa", "tau(-3)", "2 tau(-4)", "3 + 12g", "1-kappa",
                             "12g + tau(-3)", "kappa", "-kappa"}) {
        CAPTURE(text);
        Value v = evaluate(text, point);
        CHECK(evaluate(render(v, point), point) == v);
    }
    Space ne{Space::Kind::Noneq, 4, 0};
    for (auto& [k, w] : noneq::basis(4)) {
        NoneqElem x = noneq::monomial(4, k, w, pick(rng, -5, 5));
        CHECK(std::get<NoneqElem>(evaluate(render(x, ne), ne)) == x);
    }
}

TEST_CASE("persisted product tables agree with fresh computation")
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("eqq_cache_test_" + std::to_string(std::random_device{}()));
    fs::remove_all(dir);
    Rng rng(5);
    std::vector<std::tuple<Int, QElem, QElem>> cases;
    for (Int p = 1; p <= 5; ++p)
        for (int t = 0; t < 60; ++t)
            cases.push_back({p, random_basis_element(rng, p), random_basis_element(rng, p)});
    {
        cache::ProductTables cold(dir);
        for (auto& [p, x, y] : cases)
            CHECK(cold.multiply(x, y) == quad::mul(x, y));
        CHECK(cold.stats().computed > 0);
    }
    cache::ProductTables warm(dir);
    for (auto& [p, x, y] : cases)
        CHECK(warm.multiply(x, y) == quad::mul(x, y));
    CHECK(warm.stats().loaded > 0);
    CHECK(warm.stats().rebuilt == 0);

    // a corrupted table is detected and rebuilt
    auto [p0, x0, y0] = cases.front();
    Int n1 = quad::grading(x0).w, n2 = quad::grading(y0).w;
    fs::path f = warm.file_for(p0, std::min(n1, n2), std::max(n1, n2));
    REQUIRE(fs::exists(f));
    std::ofstream(f) << "{ not json";
    cache::ProductTables fixed(dir);
    CHECK(fixed.multiply(x0, y0) == quad::mul(x0, y0));
    CHECK(fixed.stats().rebuilt == 1);
    fs::remove_all(dir);
}
