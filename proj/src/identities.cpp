#include "eqq/identities.hpp"

#include "eqq/expr.hpp"
#include "eqq/restrict.hpp"

namespace eqq::ident {

namespace {

std::string pw(const std::string& g, Int k)
{
    if (k == 0)
        return "1";
    return k == 1 ? g : g + "^" + std::to_string(k);
}

std::string m(Int s) { return "m[" + std::to_string(s) + "]"; }

const QuadricStrategy strategies[] = {{false, false}, {true, true}, {true, false}, {false, true}};

void record(Check& out, const std::string& label, bool ok, const std::string& detail = "")
{
    out.ok = out.ok && ok;
    out.trace.push_back(label + (ok ? "  [ok]" : "  [FAILED" + (detail.empty() ? "" : ": " + detail) + "]"));
}

// Every expression in `chain` has the same normal form, for every strategy.
void chain_equal(Check& out, Int p, const std::string& label, const std::vector<std::string>& chain)
{
    QElem first = eval_quadric(p, chain.front());
    std::string detail;
    for (auto& how : strategies)
        for (auto& step : chain) {
            QElem v = eval_quadric(p, step, how);
            if (v != first && detail.empty())
                detail = step + " -> " + quad::to_string(v) + " vs " + quad::to_string(first);
        }
    std::string text;
    for (auto& step : chain)
        text += (text.empty() ? "" : " = ") + step;
    record(out, "p=" + std::to_string(p) + " " + label + ": " + text, detail.empty(), detail);
}

bool same_components(const FixedElem& x, const FixedElem& y) { return x.comp0 == y.comp0 && x.comp1 == y.comp1; }

}  // namespace

QElem eval_quadric(Int p, const std::string& text, const QuadricStrategy& how)
{
    return std::get<QElem>(evaluate(text, Space{Space::Kind::Quadric, p, 0}, how));
}

Check relations(Int p)
{
    Check out;
    for (Int s = 0; s + 1 <= p; ++s)
        chain_equal(out, p, "(i) s=" + std::to_string(s),
                    {pw("cw", s) + " " + pw("cxw", p - 1 - s), "z0 " + m(s + 1) + " + z1 " + m(s)});
    for (Int s = 0; s + 1 <= p; ++s)
        chain_equal(out, p, "(ii) s=" + std::to_string(s), {"cxw " + m(s + 1), "cw " + m(s)});
    for (Int s = 0; s <= p; ++s)
        chain_equal(out, p, "(iii) s=" + std::to_string(s), {m(s) + " " + m(p - s), "0"});
    for (Int s = 0; s <= p; ++s) {
        std::string lhs = pw("cw", s) + " " + pw("cxw", p - s);
        std::string target = "(z0 cw + z1 cxw) " + m(s);
        // peel a ĉ_χ off and apply (i) at s
        if (s < p)
            chain_equal(out, p, "euler s=" + std::to_string(s) + " via cxw",
                        {lhs, "(" + pw("cw", s) + " " + pw("cxw", p - s - 1) + ") cxw",
                         "z0 cxw " + m(s + 1) + " + z1 cxw " + m(s), target});
        // peel a ĉ off and apply (i) at s−1
        if (s >= 1)
            chain_equal(out, p, "euler s=" + std::to_string(s) + " via cw",
                        {lhs, "cw (" + pw("cw", s - 1) + " " + pw("cxw", p - s) + ")",
                         "z0 cw " + m(s) + " + z1 cw " + m(s - 1), target});
    }
    return out;
}

Check restrictions(Int p)
{
    Check out;
    auto rho_of = [&](const std::string& t) { return rho_quadric(eval_quadric(p, t)); };
    auto fix_of = [&](const std::string& t) { return fixed_quadric(eval_quadric(p, t)); };
    auto pre = [&](Int s) { return "p=" + std::to_string(p) + " s=" + std::to_string(s) + " "; };
    for (Int s = 0; s + 1 <= p; ++s) {
        std::string lhs = pw("cw", s) + " " + pw("cxw", p - 1 - s);
        NoneqElem want = noneq::c_power(p, p - 1);
        NoneqElem sum = noneq::add(noneq::m(p, 0), noneq::m(p, 1));
        NoneqElem l = rho_of(lhs), r = rho_of("z0 " + m(s + 1) + " + z1 " + m(s));
        record(out, pre(s) + "rho (i): " + noneq::to_string(l) + " = " + noneq::to_string(r) + " = m0 + m1",
               l == want && r == want && want == sum);
        FixedElem fl = fix_of(lhs), f0 = fix_of("z0 " + m(s + 1)), f1 = fix_of("z1 " + m(s));
        bool ok = same_components(fl, fixedring::pair(p, 1, s, 1, p - 1 - s)) &&
                  same_components(f0, fixedring::pair(p, 0, 0, 1, p - 1 - s)) &&
                  same_components(f1, fixedring::pair(p, 1, s, 0, 0));
        record(out, pre(s) + "fixed (i): " + fixedring::to_string(fl) + " = " + fixedring::to_string(f0) + " + " +
                        fixedring::to_string(f1),
               ok);
    }
    for (Int s = 0; s + 1 <= p; ++s) {
        NoneqElem l = rho_of("cxw " + m(s + 1)), r = rho_of("cw " + m(s));
        NoneqElem want = noneq::monomial(p, 1, int((s + 1) % 2));
        record(out, pre(s) + "rho (ii): " + noneq::to_string(l) + " = " + noneq::to_string(r), l == r && l == want);
        FixedElem fl = fix_of("cxw " + m(s + 1)), fr = fix_of("cw " + m(s));
        FixedElem want_f = fixedring::pair(p, 1, s + 1, 1, p - s);
        record(out, pre(s) + "fixed (ii): " + fixedring::to_string(fl) + " = " + fixedring::to_string(fr),
               same_components(fl, fr) && same_components(fl, want_f));
    }
    for (Int s = 0; s <= p; ++s) {
        FixedElem prod = fixedring::mul(fix_of(m(s)), fix_of(m(p - s)));
        bool ok = same_components(fix_of(m(s)), fixedring::pair(p, 1, s, 1, p - s)) && prod.is_zero();
        record(out, pre(s) + "fixed (iii): " + fixedring::to_string(fix_of(m(s))) + " " +
                        fixedring::to_string(fix_of(m(p - s))) + " = (c^" + std::to_string(p) + " | c^" +
                        std::to_string(p) + ") = " + fixedring::to_string(prod),
               ok);
    }
    return out;
}

Check underlying_products(Int p)
{
    Check out;
    NoneqElem m0 = noneq::m(p, 0), m1 = noneq::m(p, 1);
    for (Int s = 0; s <= p; ++s) {
        NoneqElem image = noneq::mul(noneq::m(p, int(s % 2)), noneq::m(p, int((p - s) % 2)));
        std::string which = p % 2 == 1 ? "m0 m1" : (s % 2 == 0 ? "m0^2" : "m1^2");
        NoneqElem expected = p % 2 == 1 ? noneq::mul(m0, m1) : (s % 2 == 0 ? noneq::mul(m0, m0) : noneq::mul(m1, m1));
        bool ok = image.is_zero() && expected.is_zero() && rho_quadric(eval_quadric(p, m(s) + " " + m(p - s))).is_zero();
        record(out, "p=" + std::to_string(p) + " s=" + std::to_string(s) + ": rho(m_s m_{p-s}) = " + which + " = 0", ok);
    }
    // the surviving product, and both sides of m0^2 + m0 m1 = c^{p−1} m0 = c^{p−1} m1 = m0 m1 + m1^2
    NoneqElem cm = noneq::monomial(p, p - 1, 0);
    NoneqElem a = noneq::add(noneq::mul(m0, m0), noneq::mul(m0, m1));
    NoneqElem b = noneq::add(noneq::mul(m0, m1), noneq::mul(m1, m1));
    // c^{p−1}m0 = c^{p−1}m1 needs relation (ii), which is empty for p = 1
    bool ok = a == cm && (p == 1 || (b == cm && noneq::monomial(p, p - 1, 1) == cm));
    record(out, "p=" + std::to_string(p) + ": m0^2 + m0 m1 = c^(p-1) m0 = c^(p-1) m1 = m0 m1 + m1^2", ok);
    NoneqElem mixed = noneq::mul(m0, m1);
    bool parity = p % 2 == 1 ? mixed.is_zero() : mixed == cm;
    record(out, "p=" + std::to_string(p) + ": m0 m1 = " + noneq::to_string(mixed), parity);
    return out;
}

}  // namespace eqq::ident
