#include "eqq/restrict.hpp"

#include "eqq/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace eqq {

namespace noneq {

namespace {

void put(NoneqElem& x, std::pair<Int, int> key, Int c)
{
    if (c == 0)
        return;
    Int& slot = x.terms[key];
    slot += c;
    if (slot == 0)
        x.terms.erase(key);
}

void same_p(const NoneqElem& x, const NoneqElem& y)
{
    if (x.p != y.p)
        fail(ErrorKind::SpaceMismatch, "nonequivariant elements of different quadrics");
}

}  // namespace

NoneqElem zero(Int p)
{
    if (p < 1)
        fail(ErrorKind::Range, "quadric needs p >= 1");
    return {p, {}};
}

NoneqElem monomial(Int p, Int k, int which, Int coeff)
{
    NoneqElem r = zero(p);
    if (coeff == 0)
        return r;
    if (which < 0) {
        if (k <= p - 2) {
            put(r, {k, -1}, coeff);
            return r;
        }
        // c^{p−1} = m0 + m1
        return add(monomial(p, k - (p - 1), 0, coeff), monomial(p, k - (p - 1), 1, coeff));
    }
    if (which == 1 && k >= 1)
        which = 0;  // c·m1 = c·m0
    if (k >= p)
        return r;
    put(r, {k, which}, coeff);
    return r;
}

NoneqElem constant(Int p, Int k) { return monomial(p, 0, -1, k); }
NoneqElem c_power(Int p, Int k) { return monomial(p, k, -1); }
NoneqElem m(Int p, int which) { return monomial(p, 0, which); }

NoneqElem add(const NoneqElem& x, const NoneqElem& y)
{
    same_p(x, y);
    NoneqElem r = x;
    for (auto& [k, c] : y.terms)
        put(r, k, c);
    return r;
}

NoneqElem scale(Int k, const NoneqElem& x)
{
    NoneqElem r = zero(x.p);
    for (auto& [key, c] : x.terms)
        put(r, key, k * c);
    return r;
}

NoneqElem mul(const NoneqElem& x, const NoneqElem& y)
{
    same_p(x, y);
    Int p = x.p;
    NoneqElem r = zero(p);
    for (auto& [k1, c1] : x.terms)
        for (auto& [k2, c2] : y.terms) {
            Int k = k1.first + k2.first, c = c1 * c2;
            int w1 = k1.second, w2 = k2.second;
            if (w1 < 0 || w2 < 0) {
                r = add(r, monomial(p, k, w1 < 0 ? w2 : w1, c));
                continue;
            }
            // m_{[a]} m_{[b]}: zero for the pair forced by m_s m_{p−s} = 0, c^{p−1}m otherwise
            bool vanishes = (p % 2 == 1) ? (w1 != w2) : (w1 == w2);
            if (!vanishes)
                r = add(r, monomial(p, k + p - 1, w1, c));
        }
    return r;
}

std::vector<std::pair<Int, int>> basis(Int p)
{
    std::vector<std::pair<Int, int>> out;
    for (Int k = 0; k <= p - 2; ++k)
        out.push_back({k, -1});
    out.push_back({0, 0});
    out.push_back({0, 1});
    for (Int k = 1; k <= p - 1; ++k)
        out.push_back({k, 0});
    return out;
}

std::string to_string(const NoneqElem& x)
{
    std::string out;
    for (auto it = x.terms.rbegin(); it != x.terms.rend(); ++it) {
        auto [key, c] = *it;
        std::string body;
        if (key.first == 1)
            body = "c";
        else if (key.first > 1)
            body = "c^" + std::to_string(key.first);
        if (key.second >= 0)
            body += (body.empty() ? "" : " ") + std::string(key.second == 0 ? "m0" : "m1");
        Int a = std::llabs(c);
        std::string term = body.empty() ? std::to_string(a) : (a == 1 ? body : std::to_string(a) + " " + body);
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace noneq

bool FixedElem::is_zero() const
{
    for (Int c : comp0)
        if (c != 0)
            return false;
    for (Int c : comp1)
        if (c != 0)
            return false;
    return true;
}

namespace fixedring {

FixedElem zero(Int p, Int deg0, Int deg1)
{
    FixedElem r;
    r.p = p;
    r.comp0.assign(p, 0);
    r.comp1.assign(p, 0);
    r.deg0 = deg0;
    r.deg1 = deg1;
    return r;
}

FixedElem pair(Int p, Int coeff0, Int k0, Int coeff1, Int k1)
{
    FixedElem r = zero(p, 2 * k0, 2 * k1);
    if (k0 < p)
        r.comp0[k0] = coeff0;
    if (k1 < p)
        r.comp1[k1] = coeff1;
    return r;
}

FixedElem add(const FixedElem& x, const FixedElem& y)
{
    if (x.p != y.p)
        fail(ErrorKind::SpaceMismatch, "fixed-point elements of different quadrics");
    FixedElem r = x;
    for (Int k = 0; k < x.p; ++k) {
        r.comp0[k] += y.comp0[k];
        r.comp1[k] += y.comp1[k];
    }
    return r;
}

FixedElem scale(Int k, const FixedElem& x)
{
    FixedElem r = x;
    for (auto& c : r.comp0)
        c *= k;
    for (auto& c : r.comp1)
        c *= k;
    return r;
}

FixedElem mul(const FixedElem& x, const FixedElem& y)
{
    if (x.p != y.p)
        fail(ErrorKind::SpaceMismatch, "fixed-point elements of different quadrics");
    FixedElem r = zero(x.p, x.deg0 + y.deg0, x.deg1 + y.deg1);
    for (Int a = 0; a < x.p; ++a)
        for (Int b = 0; a + b < x.p; ++b) {
            r.comp0[a + b] += x.comp0[a] * y.comp0[b];
            r.comp1[a + b] += x.comp1[a] * y.comp1[b];
        }
    return r;
}

namespace {

std::string poly(const std::vector<Int>& v)
{
    std::string out;
    for (Int k = static_cast<Int>(v.size()) - 1; k >= 0; --k) {
        Int c = v[k];
        if (c == 0)
            continue;
        std::string body = k == 0 ? "" : (k == 1 ? "c" : "c^" + std::to_string(k));
        Int a = std::llabs(c);
        std::string term = body.empty() ? std::to_string(a) : (a == 1 ? body : std::to_string(a) + " " + body);
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const FixedElem& x) { return "(" + poly(x.comp0) + " | " + poly(x.comp1) + ")"; }

}  // namespace fixedring

NoneqElem rho_quadric(const QElem& x)
{
    NoneqElem r = noneq::zero(x.p);
    if (x.is_zero())
        return r;
    quad::grading(x);  // homogeneity
    for (auto& [m, c] : x.terms) {
        Int k = rho(c).augmentation();
        r = noneq::add(r, noneq::monomial(x.p, m.i + m.j, m.has_m() ? static_cast<int>(m.m % 2) : -1, k));
    }
    return r;
}

FixedElem fixed_quadric(const QElem& x)
{
    Int p = x.p;
    if (x.is_zero())
        return fixedring::zero(p);
    auto [d0, d1] = fixed_dims(quad::grading(x));
    FixedElem r = fixedring::zero(p, d0, d1);
    for (auto& [m, c] : x.terms) {
        Int h = fixed(c);
        Int I = m.i + (m.has_m() ? m.m : 0);
        Int J = m.j + (m.has_m() ? p - m.m : 0);
        // ζ₀ vanishes on component 0, ζ₁ on component 1; divided classes live on the other component only
        if (m.a == 0 && I < p)
            r.comp0[I] += h;
        if (m.b == 0 && J < p)
            r.comp1[J] += h;
    }
    return r;
}

namespace {

// r with target = r·image, if it exists.
std::optional<Int> ratio(const std::vector<std::pair<Int, Int>>& pairs)
{
    std::optional<Int> r;
    for (auto [img, tgt] : pairs) {
        if (img == 0) {
            if (tgt != 0)
                return std::nullopt;
            continue;
        }
        if (tgt % img != 0)
            return std::nullopt;
        Int q = tgt / img;
        if (r && *r != q)
            return std::nullopt;
        r = q;
    }
    return r;
}

}  // namespace

Burnside solve_burnside_coeff(Int p, const QMonomial& target, const NoneqElem& rho_target, const FixedElem& fixed_target)
{
    QElem mono = quad::monomial(p, target);
    NoneqElem rm = rho_quadric(mono);
    FixedElem fm = fixed_quadric(mono);

    std::vector<std::pair<Int, Int>> rp;
    for (auto& key : noneq::basis(p)) {
        auto a = rm.terms.find(key);
        auto b = rho_target.terms.find(key);
        rp.push_back({a == rm.terms.end() ? 0 : a->second, b == rho_target.terms.end() ? 0 : b->second});
    }
    for (auto& [key, c] : rho_target.terms)
        if (!rm.terms.count(key) && c != 0)
            fail(ErrorKind::InconsistentTargets, "rho target is not a multiple of the basis monomial's image");
    auto r = ratio(rp);
    if (!r)
        fail(ErrorKind::InconsistentTargets, "rho target is not a multiple of the basis monomial's image");

    auto nonzero = [](const std::vector<Int>& v) { return std::any_of(v.begin(), v.end(), [](Int c) { return c != 0; }); };
    // a vanishing component carries no degree information
    if (fixed_target.p != p || (nonzero(fixed_target.comp0) && fixed_target.deg0 != fm.deg0) ||
        (nonzero(fixed_target.comp1) && fixed_target.deg1 != fm.deg1))
        fail(ErrorKind::InconsistentTargets, "fixed target has the wrong degrees");
    std::vector<std::pair<Int, Int>> fp;
    for (Int k = 0; k < p; ++k) {
        fp.push_back({fm.comp0[k], fixed_target.comp0[k]});
        fp.push_back({fm.comp1[k], fixed_target.comp1[k]});
    }
    auto f = ratio(fp);
    if (!f)
        fail(ErrorKind::InconsistentTargets, "fixed target is not a multiple of the basis monomial's image");
    return solve(*r, *f);
}

}  // namespace eqq
