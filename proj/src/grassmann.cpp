#include "eqq/grassmann.hpp"

#include "eqq/errors.hpp"

#include <functional>
#include <map>

namespace eqq::grass {

namespace {

using Poly2 = std::map<std::pair<Int, Int>, Int>;  // x^i y^j

Poly2 times(const Poly2& f, const Poly2& g)
{
    Poly2 r;
    for (auto& [m1, c1] : f)
        for (auto& [m2, c2] : g)
            r[{m1.first + m2.first, m1.second + m2.second}] += c1 * c2;
    std::erase_if(r, [](auto& kv) { return kv.second == 0; });
    return r;
}

Poly2 power(const Poly2& f, Int k)
{
    Poly2 r{{{0, 0}, 1}};
    for (Int t = 0; t < k; ++t)
        r = times(r, f);
    return r;
}

QElem gen(QMonomial m, Int coeff = 1) { return quad::monomial(p, m, HElem(coeff)); }
QElem z0(Int k = 1) { return gen({k, 0, 0, 0, -1}); }
QElem z1(Int k = 1) { return gen({0, k, 0, 0, -1}); }
QElem cl(Int k = 1) { return gen({0, 0, k, 0, -1}); }
QElem cxl(Int k = 1) { return gen({0, 0, 0, k, -1}); }
QElem m(Int s) { return quad::m_class(p, s); }
QElem h(const HElem& c) { return quad::scalar(p, c); }
QElem operator*(const QElem& x, const QElem& y) { return quad::mul(x, y); }
QElem operator+(const QElem& x, const QElem& y) { return quad::add(x, y); }
QElem operator-(const QElem& x, const QElem& y) { return quad::sub(x, y); }

}  // namespace

RepC2 sym_power(RepC2 r, Int k)
{
    // degree-k monomials in nplus trivial and nminus sign variables; fixed iff the sign-degree is even
    RepC2 out;
    Int vars = r.rank();
    std::vector<Int> exps(vars, 0);
    std::function<void(Int, Int, Int)> walk = [&](Int idx, Int left, Int sign_deg) {
        if (idx == vars - 1 || vars == 0) {
            if (vars == 0) {
                if (left == 0)
                    ++out.nplus;
                return;
            }
            Int sd = sign_deg + (idx >= r.nplus ? left : 0);
            (sd % 2 == 0 ? out.nplus : out.nminus) += 1;
            return;
        }
        for (Int e = 0; e <= left; ++e)
            walk(idx + 1, left - e, sign_deg + (idx >= r.nplus ? e : 0));
    };
    if (k < 0)
        fail(ErrorKind::Range, "symmetric power needs k >= 0");
    walk(0, k, 0);
    return out;
}

Grading sym3_grading()
{
    // π∨ restricts to ℂ² over the plane component and to ℂ^{1|1} over the other
    RepC2 f0 = sym_power({2, 0}, 3), f1 = sym_power({1, 1}, 3);
    if (f0.rank() != f1.rank())
        fail(ErrorKind::Internal, "fiber ranks disagree");
    return grading_from_dims(2 * f0.rank(), 2 * f0.nplus, 2 * f1.nplus);
}

std::pair<QElem, QElem> tautological_euler() { return {m(2), z1(2) * m(0)}; }

Check cxg_relation_check(Int e2_coeff)
{
    const HElem omk = HElem::one_minus_kappa(), e2 = HElem::e(2), xi = HElem::xi(1);
    std::vector<std::pair<std::string, QElem>> steps{
        {"z1^2 m0", z1(2) * m(0)},
        {"z1 (cxl^2 - z0 m1)", z1() * (cxl(2) - z0() * m(1))},
        {"z1 cxl^2 - xi m1", z1() * cxl(2) - h(xi) * m(1)},
        {"(1-kappa) z0 cl cxl + e^2 cxl - (1-kappa) xi m1",
         h(omk) * z0() * cl() * cxl() + h(e2) * cxl() - h(omk) * h(xi) * m(1)},
        {"(1-kappa) z0 cl cxl + e^2 cxl - (1-kappa) z0 (cl cxl - z0 m2)",
         h(omk) * z0() * cl() * cxl() + h(e2) * cxl() - h(omk) * z0() * (cl() * cxl() - z0() * m(2))},
        {"(1-kappa) z0^2 m2 + e^2 cxl", h(omk) * z0(2) * m(2) + h(e2) * cxl()},
        {"(1-kappa) z0^2 cg + e^2 cxl", h(omk) * z0(2) * tautological_euler().first + h(HElem(e2_coeff) * e2) * cxl()},
    };
    Check out;
    const QElem& first = steps.front().second;
    for (size_t k = 0; k < steps.size(); ++k) {
        bool same = steps[k].second == first;
        out.ok = out.ok && same;
        out.trace.push_back("step " + std::to_string(k + 1) + ": " + steps[k].first + "  ->  " + to_string(steps[k].second) +
                            (same ? "  [ok]" : "  [MISMATCH]"));
    }
    return out;
}

Check presentation_check()
{
    Check out;
    const HElem omk = HElem::one_minus_kappa(), e2 = HElem::e(2), xi = HElem::xi(1);
    auto expect_zero = [&](const std::string& label, const QElem& x) {
        bool ok = x.is_zero();
        out.ok = out.ok && ok;
        out.trace.push_back(label + (ok ? "  [ok]" : "  [FAILED: " + to_string(x) + "]"));
    };
    expect_zero("z0 z1 = xi", z0() * z1() - h(xi));
    expect_zero("z1 cxl = (1-kappa) z0 cl + e^2", z1() * cxl() - h(omk) * z0() * cl() - h(e2));
    for (Int s = 0; s <= 2; ++s)
        expect_zero("cl^" + std::to_string(s) + " cxl^" + std::to_string(2 - s) + " = z0 m" + std::to_string(s + 1) + " + z1 m" + std::to_string(s),
                    cl(s) * cxl(2 - s) - z0() * m(s + 1) - z1() * m(s));
    for (Int s = 0; s <= 2; ++s)
        expect_zero("cxl m" + std::to_string(s + 1) + " = cl m" + std::to_string(s), cxl() * m(s + 1) - cl() * m(s));
    expect_zero("m3 m0 = 0", m(3) * m(0));
    expect_zero("m2 m1 = 0", m(2) * m(1));

    auto divisible = [&](const std::string& label, const QElem& x, quad::Zeta which) {
        bool ok = true;
        std::string why;
        try {
            for (Int k = 1; k <= 3 && ok; ++k) {
                QElem y = quad::divide(x, which, k);
                ok = quad::mul(quad::zeta_power(p, which, k), y) == x;
            }
        }
        catch (const Error& e) {
            ok = false;
            why = e.what();
        }
        out.ok = out.ok && ok;
        out.trace.push_back(label + (ok ? "  [ok]" : "  [FAILED " + why + "]"));
    };
    for (Int s = 0; s <= 3; ++s)
        divisible("cl^" + std::to_string(s) + " m" + std::to_string(3 - s) + " divisible by z0", cl(s) * m(3 - s), quad::Zeta::Z0);
    for (Int s = 0; s <= 3; ++s)
        divisible("cxl^" + std::to_string(3 - s) + " m" + std::to_string(3 - s) + " divisible by z1", cxl(3 - s) * m(3 - s), quad::Zeta::Z1);
    return out;
}

std::vector<std::pair<std::pair<Int, Int>, Int>> sym_euler_in_chern(Int k)
{
    Poly2 f{{{0, 0}, 1}};
    for (Int a = 0; a <= k; ++a)
        f = times(f, Poly2{{{1, 0}, a}, {{0, 1}, k - a}});
    std::erase_if(f, [](auto& kv) { return kv.second == 0; });
    // symmetric reduction: leading x^i y^j (i ≥ j) contributes c₁^{i−j} c₂^j
    std::map<std::pair<Int, Int>, Int> chern;
    const Poly2 e1{{{1, 0}, 1}, {{0, 1}, 1}}, e2{{{1, 1}, 1}};
    while (!f.empty()) {
        auto lead = std::prev(f.end())->first;  // largest x-exponent
        Int c = f[lead];
        auto [i, j] = lead;
        if (i < j)
            fail(ErrorKind::Internal, "polynomial is not symmetric");
        chern[{i - j, j}] += c;
        Poly2 sub = times(power(e1, i - j), power(e2, j));
        for (auto& [mono, d] : sub)
            f[mono] -= c * d;
        std::erase_if(f, [](auto& kv) { return kv.second == 0; });
    }
    return {chern.begin(), chern.end()};
}

EulerResult euler_sym3()
{
    EulerResult r;
    r.grading = sym3_grading();
    r.trace.push_back("grading of Sym^3(dual tautological) = " + eqq::to_string(r.grading));

    auto [n, a, b] = coset(r.grading);
    std::vector<QMonomial> hits;
    for (auto& mono : quad::basis(p, n))
        if (grading_of(p, mono) == r.grading)
            hits.push_back(mono);
    if (hits.size() != 1)
        fail(ErrorKind::AmbiguousGrading, "expected one basis monomial in grading " + eqq::to_string(r.grading));
    r.monomial = hits.front();
    r.trace.push_back("basis monomial in that grading: " + eqq::to_string(r.monomial, names));

    // underlying: Chern roots, c₁ = c and c₂ = m0
    r.rho_target = noneq::zero(p);
    std::string chern_text;
    for (auto& [ex, coeff] : sym_euler_in_chern(3)) {
        NoneqElem term = noneq::constant(p, coeff);
        term = noneq::mul(term, noneq::c_power(p, ex.first));
        for (Int t = 0; t < ex.second; ++t)
            term = noneq::mul(term, noneq::m(p, 0));
        r.rho_target = noneq::add(r.rho_target, term);
        chern_text += (chern_text.empty() ? "" : " + ") + std::to_string(coeff) + " c1^" + std::to_string(ex.first) + " c2^" +
                      std::to_string(ex.second);
    }
    r.trace.push_back("underlying Euler class: " + chern_text + " = " + noneq::to_string(r.rho_target));

    // fixed points: component 0 carries ℂ² (rank-4 Euler class, degree beyond c²), component 1 splits as η³ ⊕ η
    auto [d0, d1] = fixed_dims(r.grading);
    r.fixed_target = fixedring::zero(p, d0, d1);
    Int coeff1 = 1, deg1 = 0;
    for (Int a3 = 3; a3 >= 0; --a3) {
        Int sign_deg = 3 - a3;
        if (sign_deg % 2 != 0)
            continue;  // moves with the sign representation
        coeff1 *= a3;
        ++deg1;
    }
    if (deg1 < p)
        r.fixed_target.comp1[deg1] = coeff1;
    r.trace.push_back("fixed summands over the second component: eta^3 + eta^2 (x) C^sigma + eta + C^sigma, fixed part eta^3 + eta");
    r.trace.push_back("fixed Euler class: " + fixedring::to_string(r.fixed_target));

    r.alpha = solve_burnside_coeff(p, r.monomial, r.rho_target, r.fixed_target);
    r.value = quad::monomial(p, r.monomial, HElem(r.alpha));
    r.trace.push_back("rho(alpha) = " + std::to_string(rho(r.alpha)) + ", fixed(alpha) = " + std::to_string(fixed(r.alpha)) +
                      ", alpha = " + eqq::to_string(r.alpha));
    return r;
}

LinesReport lines_report(const EulerResult& e)
{
    LinesReport r;
    r.type_ii = e.alpha.a;
    r.type_iv = e.alpha.b;
    r.total = rho(e.alpha);
    r.c2_set = std::to_string(e.alpha.b) + "[C₂/e] + " + std::to_string(e.alpha.a) + "[C₂/C₂]";
    return r;
}

std::string to_string(const QElem& x) { return quad::to_string(x, names); }

}  // namespace eqq::grass
