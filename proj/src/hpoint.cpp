#include "eqq/hpoint.hpp"

#include "eqq/errors.hpp"

#include <cstdlib>

namespace eqq {

IotaElem IotaElem::mono(Int k, Int c)
{
    IotaElem r;
    if (c != 0)
        r.terms[k] = c;
    return r;
}

Int IotaElem::at(Int k) const
{
    auto it = terms.find(k);
    return it == terms.end() ? 0 : it->second;
}

Int IotaElem::augmentation() const
{
    Int s = 0;
    for (auto& [k, c] : terms)
        s += c;
    return s;
}

IotaElem operator+(const IotaElem& x, const IotaElem& y)
{
    IotaElem r = x;
    for (auto& [k, c] : y.terms) {
        Int& slot = r.terms[k];
        slot += c;
        if (slot == 0)
            r.terms.erase(k);
    }
    return r;
}

IotaElem operator*(const IotaElem& x, const IotaElem& y)
{
    IotaElem r;
    for (auto& [k1, c1] : x.terms)
        for (auto& [k2, c2] : y.terms)
            r = r + IotaElem::mono(k1 + k2, c1 * c2);
    return r;
}

IotaElem operator*(Int k, const IotaElem& x) { return IotaElem::mono(0, k) * x; }

RO2 symbol_grading(const HSymbol& s)
{
    switch (s.kind) {
    case HKind::Unit: return {0, 0};
    case HKind::E: return {0, s.x};
    case HKind::Xi: return {-2 * s.x, 2 * s.x};
    case HKind::EXi: return {-2 * s.y, s.x + 2 * s.y};
    case HKind::NegKappa: return {0, -s.x};
    case HKind::TauNeg: return {s.x, -s.x};
    }
    return {};
}

bool is_torsion(const HSymbol& s)
{
    return s.kind == HKind::EXi || (s.kind == HKind::TauNeg && s.x % 2 != 0);
}

void HElem::add_symbol(const HSymbol& s, Int c)
{
    if (c == 0)
        return;
    if (s.kind == HKind::Unit) {
        unit_ = unit_ + Burnside{c, 0};
        return;
    }
    Int& slot = terms_[s];
    slot += c;
    if (is_torsion(s))
        slot = ((slot % 2) + 2) % 2;
    if (slot == 0)
        terms_.erase(s);
}

HElem HElem::symbol(const HSymbol& s, Int c)
{
    // Collapse degenerate exponents so every stored symbol is canonical.
    switch (s.kind) {
    case HKind::E:
        if (s.x == 0)
            return HElem(c);
        if (s.x < 0)
            fail(ErrorKind::OutOfScope, "negative power of e without kappa");
        break;
    case HKind::Xi:
        if (s.x == 0)
            return HElem(c);
        if (s.x < 0)
            fail(ErrorKind::OutOfScope, "negative power of xi");
        break;
    case HKind::EXi:
        if (s.x == 0)
            return symbol({HKind::Xi, s.y, 0}, c);
        if (s.y == 0)
            return symbol({HKind::E, s.x, 0}, c);
        if (s.x < 0 || s.y < 0)
            fail(ErrorKind::OutOfScope, "negative exponent in e^a xi^b");
        break;
    case HKind::NegKappa:
        if (s.x == 0)
            return HElem(c * Burnside::kappa());
        if (s.x < 0)
            return symbol({HKind::E, -s.x, 0}, 2 * c);
        break;
    case HKind::TauNeg:
        if (s.x <= 1) {
            // τ(ι^k) for k = −x ≥ −1
            IotaElem t = IotaElem::mono(-s.x, c);
            return tau(t);
        }
        break;
    case HKind::Unit: return HElem(c);
    }
    HElem r;
    r.add_symbol(s, c);
    return r;
}

HElem HElem::e(Int a) { return symbol({HKind::E, a, 0}); }
HElem HElem::xi(Int b) { return symbol({HKind::Xi, b, 0}); }
HElem HElem::e_xi(Int a, Int b) { return symbol({HKind::EXi, a, b}); }
HElem HElem::neg_kappa(Int m) { return symbol({HKind::NegKappa, m, 0}); }
HElem HElem::tau_neg(Int n) { return symbol({HKind::TauNeg, n, 0}); }

HElem& HElem::operator+=(const HElem& y)
{
    unit_ = unit_ + y.unit_;
    for (auto& [s, c] : y.terms_)
        add_symbol(s, c);
    return *this;
}

HElem operator-(const HElem& x)
{
    HElem r;
    r.unit_ = -x.unit_;
    for (auto& [s, c] : x.terms_)
        r.add_symbol(s, -c);
    return r;
}

namespace {

IotaElem rho_symbol(const HSymbol& s)
{
    switch (s.kind) {
    case HKind::Xi: return IotaElem::mono(2 * s.x);
    // ρτ(ι^k) = ι^k + (−1)^k ι^k, so odd τ-classes restrict to zero.
    case HKind::TauNeg: return s.x % 2 == 0 ? IotaElem::mono(-s.x, 2) : IotaElem{};
    default: return {};
    }
}

HElem unit_times(Burnside u, const HSymbol& s, Int c)
{
    // g acts by 2 on ξ^b and on τ-classes, and kills the e-torsion and e^{−m}κ.
    Int factor = u.a;
    if (s.kind == HKind::Xi || s.kind == HKind::TauNeg)
        factor += 2 * u.b;
    return HElem::symbol(s, factor * c);
}

HElem symbol_times(const HSymbol& s, const HSymbol& t)
{
    if (s.kind == HKind::TauNeg || t.kind == HKind::TauNeg) {
        const HSymbol& tt = s.kind == HKind::TauNeg ? s : t;
        const HSymbol& other = s.kind == HKind::TauNeg ? t : s;
        return tau(rho_symbol(other) * IotaElem::mono(-tt.x));
    }
    auto e_part = [](const HSymbol& x) -> Int {
        return x.kind == HKind::E || x.kind == HKind::EXi ? x.x : 0;
    };
    auto xi_part = [](const HSymbol& x) -> Int {
        if (x.kind == HKind::Xi)
            return x.x;
        if (x.kind == HKind::EXi)
            return x.y;
        return 0;
    };
    if (s.kind == HKind::NegKappa && t.kind == HKind::NegKappa)
        return HElem::symbol({HKind::NegKappa, s.x + t.x, 0}, 2);
    if (s.kind == HKind::NegKappa || t.kind == HKind::NegKappa) {
        const HSymbol& nk = s.kind == HKind::NegKappa ? s : t;
        const HSymbol& other = s.kind == HKind::NegKappa ? t : s;
        if (xi_part(other) > 0)
            return {};  // κξ = 0 and 2eξ = 0
        return HElem::symbol({HKind::NegKappa, nk.x - e_part(other), 0});
    }
    return HElem::symbol({HKind::EXi, e_part(s) + e_part(t), xi_part(s) + xi_part(t)});
}

}  // namespace

HElem operator*(const HElem& x, const HElem& y)
{
    HElem r(x.unit_ * y.unit_);
    for (auto& [s, c] : y.terms_)
        r += unit_times(x.unit_, s, c);
    for (auto& [s, c] : x.terms_)
        r += unit_times(y.unit_, s, c);
    for (auto& [s, c] : x.terms_)
        for (auto& [t, d] : y.terms_) {
            HElem p = symbol_times(s, t);
            if (!p.is_zero())
                r += HElem(c * d) * p;
        }
    return r;
}

HElem pow(const HElem& x, Int k)
{
    if (k < 0)
        fail(ErrorKind::OutOfScope, "negative power in the coefficient ring");
    HElem r(1);
    for (Int i = 0; i < k; ++i)
        r = r * x;
    return r;
}

HGroup group_at(RO2 g)
{
    auto [a, b] = g;
    if (a == 0 && b == 0)
        return {HGroup::BurnsideSlot, {HKind::Unit, 0, 0}};
    if (a == 0)
        return b > 0 ? HGroup{HGroup::Z, {HKind::E, b, 0}} : HGroup{HGroup::Z, {HKind::NegKappa, -b, 0}};
    if (a < 0) {
        if (a % 2 != 0)
            return {};
        Int k = -a / 2;
        if (b == 2 * k)
            return {HGroup::Z, {HKind::Xi, k, 0}};
        if (b > 2 * k)
            return {HGroup::Z2, {HKind::EXi, b - 2 * k, k}};
        return {};
    }
    // a > 0
    if (b == -a) {
        if (a == 1)
            return {};
        return {a % 2 == 0 ? HGroup::Z : HGroup::Z2, {HKind::TauNeg, a, 0}};
    }
    if (b < 0)
        fail(ErrorKind::OutOfScope, "group at " + std::to_string(a) + " + " + std::to_string(b) + "σ lies off the charted region");
    return {};
}

IotaElem rho(const HElem& x)
{
    IotaElem r = IotaElem::mono(0, eqq::rho(x.unit()));
    for (auto& [s, c] : x.terms())
        r = r + c * rho_symbol(s);
    return r;
}

HElem tau(const IotaElem& x)
{
    HElem r;
    for (auto& [k, c] : x.terms) {
        if (k == 0)
            r += HElem(c * Burnside::g());
        else if (k > 0 && k % 2 == 0)
            r += HElem(2 * c) * HElem::xi(k / 2);
        else if (k <= -2)
            r += HElem(c) * HElem::tau_neg(-k);
    }
    return r;
}

Int fixed(const HElem& x)
{
    Int r = eqq::fixed(x.unit());
    for (auto& [s, c] : x.terms()) {
        if (s.kind == HKind::E)
            r += c;
        else if (s.kind == HKind::NegKappa)
            r += 2 * c;
    }
    return r;
}

bool homogeneous_grading(const HElem& x, RO2& out)
{
    bool have = false;
    if (!x.unit().is_zero()) {
        out = {0, 0};
        have = true;
    }
    for (auto& [s, c] : x.terms()) {
        RO2 g = symbol_grading(s);
        if (have && !(g == out))
            return false;
        out = g;
        have = true;
    }
    return have;
}

std::string to_string(const HSymbol& s)
{
    auto pw = [](const char* base, Int k) {
        return k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
    };
    switch (s.kind) {
    case HKind::Unit: return "1";
    case HKind::E: return pw("e", s.x);
    case HKind::Xi: return pw("xi", s.x);
    case HKind::EXi: return pw("e", s.x) + " " + pw("xi", s.y);
    case HKind::NegKappa: return "e^-" + std::to_string(s.x) + " kappa";
    case HKind::TauNeg: return "tau(-" + std::to_string(s.x) + ")";
    }
    return "?";
}

std::string to_string(const HElem& x)
{
    std::string out;
    auto add = [&](Int c, const std::string& body) {
        if (out.empty())
            out = c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        Int a = std::llabs(c);
        if (a != 1)
            out += std::to_string(a) + " ";
        out += body;
    };
    if (!x.unit().is_zero()) {
        Burnside u = x.unit();
        if (u.b == 0)
            out = std::to_string(u.a);
        else
            out = to_coeff_string(u);
    }
    for (auto& [s, c] : x.terms())
        add(c, to_string(s));
    return out.empty() ? "0" : out;
}

std::string to_string(const IotaElem& x)
{
    std::string out;
    for (auto& [k, c] : x.terms) {
        std::string body = k == 0 ? "" : (k == 1 ? "iota" : "iota^" + std::to_string(k));
        if (out.empty())
            out = c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        Int a = std::llabs(c);
        if (body.empty())
            out += std::to_string(a);
        else
            out += (a != 1 ? std::to_string(a) + " " : "") + body;
    }
    return out.empty() ? "0" : out;
}

}  // namespace eqq
