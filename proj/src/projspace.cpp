#include "eqq/projspace.hpp"

#include "eqq/errors.hpp"
#include "eqq/render.hpp"
#include "eqq/stair.hpp"
#include "zeta_solve.hpp"

#include <algorithm>
#include <optional>

namespace eqq {

Int coset_of(const ProjMonomial& m) { return m.b - m.a + m.i - m.j; }

Grading grading_of(const ProjMonomial& m)
{
    return m.a * gr::omega0 + m.b * gr::omega1 + m.i * gr::omega + m.j * gr::chi_omega;
}

std::string to_string(const ProjMonomial& m) { return render_monomial(m.a, m.b, m.i, m.j); }

namespace proj {

namespace {

stair::Sat sat_of(ProjSpace sp) { return {sp.p, sp.q}; }

bool finite(ProjSpace sp) { return sp.p < stair::unbounded && sp.q < stair::unbounded; }

// Lazily extended staircases, one per coset.
class Stairs {
public:
    explicit Stairs(ProjSpace sp) : sp_(sp) {}
    std::pair<Int, Int> at(Int n, Int level)
    {
        auto& v = cache_[n];
        if (static_cast<Int>(v.size()) <= level)
            v = stair::staircase(sat_of(sp_), n, level + 1);
        return v[level];
    }

private:
    ProjSpace sp_;
    std::map<Int, std::vector<std::pair<Int, Int>>> cache_;
};

bool on_stair(ProjSpace sp, Stairs& st, const ProjMonomial& m)
{
    Int level = m.i + m.j;
    if (finite(sp) && level >= sp.p + sp.q)
        return false;
    return st.at(coset_of(m), level) == std::pair{m.i, m.j};
}

void accumulate(std::map<ProjMonomial, HElem>& acc, const ProjMonomial& m, const HElem& c)
{
    if (c.is_zero())
        return;
    HElem& slot = acc[m];
    slot += c;
    if (slot.is_zero())
        acc.erase(m);
}

ProjMonomial at_position(ProjSpace sp, Int n, std::pair<Int, Int> pos)
{
    stair::Exps e = stair::position(sat_of(sp), n, pos.first, pos.second);
    return {e.a, e.b, pos.first, pos.second};
}

}  // namespace

ProjElem zero(ProjSpace sp) { return {sp, {}}; }

ProjElem monomial(ProjSpace sp, const ProjMonomial& m, const HElem& c) { return reduce(sp, {{c, m}}); }

ProjElem scalar(ProjSpace sp, const HElem& c) { return reduce(sp, {{c, ProjMonomial{}}}); }

ProjElem add(const ProjElem& x, const ProjElem& y)
{
    if (!(x.space == y.space))
        fail(ErrorKind::SpaceMismatch, "adding elements of " + descriptor(x.space) + " and " + descriptor(y.space));
    ProjElem r = x;
    for (auto& [m, c] : y.terms)
        accumulate(r.terms, m, c);
    return r;
}

ProjElem scale(const HElem& c, const ProjElem& x)
{
    ProjElem r = zero(x.space);
    for (auto& [m, d] : x.terms)
        accumulate(r.terms, m, c * d);
    return r;
}

ProjElem neg(const ProjElem& x) { return scale(HElem(-1), x); }

ProjElem reduce(ProjSpace sp, const ProjRaw& raw)
{
    if (sp.p < 0 || sp.q < 0 || sp.p + sp.q < 1)
        fail(ErrorKind::Range, "projective space needs p, q >= 0 and p + q >= 1");
    stair::Sat sat = sat_of(sp);
    std::map<ProjMonomial, HElem> acc;
    for (auto& [c, m] : raw) {
        if (c.is_zero())
            continue;
        if (m.i < 0 || m.j < 0)
            fail(ErrorKind::Malformed, "negative power of a Chern class");
        stair::Canon k = stair::canon(sat, m.a, m.b, m.i, m.j);
        if (k.zero)
            continue;
        if (!k.valid)
            fail(ErrorKind::NotDivisible, to_string(m) + " is not a class of " + descriptor(sp));
        accumulate(acc, {k.e.a, k.e.b, m.i, m.j}, c * HElem::xi(k.xi));
    }

    Stairs st(sp);
    while (true) {
        // highest level first, then farthest from the staircase
        std::optional<ProjMonomial> best;
        Int best_level = 0, best_dist = 0;
        for (auto& [m, c] : acc) {
            if (on_stair(sp, st, m))
                continue;
            Int level = m.i + m.j;
            Int dist = 0;
            if (!(finite(sp) && level >= sp.p + sp.q))
                dist = std::llabs(m.i - st.at(coset_of(m), level).first);
            if (!best || level > best_level || (level == best_level && dist > best_dist)) {
                best = m;
                best_level = level;
                best_dist = dist;
            }
        }
        if (!best)
            break;
        ProjMonomial m = *best;
        HElem c = acc[m];
        acc.erase(m);
        Int n = coset_of(m);
        bool toward_i;
        if (finite(sp) && best_level >= sp.p + sp.q)
            toward_i = !sat.i_sat(m.i);
        else
            toward_i = m.j > st.at(n, best_level).second;
        stair::Move mv = toward_i ? stair::i_ward(sat, n, m.i, m.j) : stair::j_ward(sat, n, m.i, m.j);
        if (!mv.ok)
            fail(ErrorKind::Internal, "no rewrite applies to " + to_string(m) + " in " + descriptor(sp));
        if (!mv.target_zero)
            accumulate(acc, at_position(sp, n, mv.target), c * HElem::one_minus_kappa() * HElem::xi(mv.k));
        if (!mv.lower_zero)
            accumulate(acc, at_position(sp, n, mv.lower), c * HElem::e(2));
    }
    return {sp, std::move(acc)};
}

ProjElem mul(const ProjElem& x, const ProjElem& y)
{
    if (!(x.space == y.space))
        fail(ErrorKind::SpaceMismatch, "multiplying elements of " + descriptor(x.space) + " and " + descriptor(y.space));
    ProjRaw raw;
    for (auto& [m1, c1] : x.terms)
        for (auto& [m2, c2] : y.terms)
            raw.push_back({c1 * c2, {m1.a + m2.a, m1.b + m2.b, m1.i + m2.i, m1.j + m2.j}});
    return reduce(x.space, raw);
}

ProjElem pow(const ProjElem& x, Int k)
{
    if (k < 0)
        fail(ErrorKind::Malformed, "negative power of a ring element");
    ProjElem r = scalar(x.space, HElem(1));
    for (Int t = 0; t < k; ++t)
        r = mul(r, x);
    return r;
}

std::vector<std::pair<Int, Int>> staircase(Int p, Int q, Int n)
{
    return stair::staircase({p, q}, n, p + q);
}

std::vector<ProjMonomial> basis(Int p, Int q, Int n)
{
    if (p < 0 || q < 0 || p + q < 1)
        fail(ErrorKind::Range, "projective space needs p, q >= 0 and p + q >= 1");
    std::vector<ProjMonomial> out;
    for (auto pos : staircase(p, q, n))
        out.push_back(at_position({p, q}, n, pos));
    return out;
}

bool is_basis_monomial(ProjSpace sp, const ProjMonomial& m)
{
    Stairs st(sp);
    if (!on_stair(sp, st, m))
        return false;
    return at_position(sp, coset_of(m), {m.i, m.j}) == m;
}

std::map<ProjMonomial, HElem> express_in_basis(const ProjElem& x)
{
    std::optional<Int> n;
    for (auto& [m, c] : x.terms) {
        if (n && *n != coset_of(m))
            fail(ErrorKind::NotHomogeneous, "element spans several cosets");
        n = coset_of(m);
    }
    ProjRaw raw;
    for (auto& [m, c] : x.terms)
        raw.push_back({c, m});
    return reduce(x.space, raw).terms;
}

namespace {

std::optional<HElem> divide_by_xi(const HElem& c)
{
    HElem r;
    if (c.unit().a != 0)
        return std::nullopt;
    if (c.unit().b != 0)
        r += HElem(c.unit().b) * HElem::tau_neg(2);  // g = ξ·τ(ι^{−2})
    for (auto& [s, k] : c.terms()) {
        switch (s.kind) {
        case HKind::Xi: r += HElem(k) * HElem::xi(s.x - 1); break;
        case HKind::EXi: r += HElem(k) * HElem::e_xi(s.x, s.y - 1); break;
        case HKind::TauNeg: r += HElem(k) * HElem::tau_neg(s.x + 2); break;
        default: return std::nullopt;
        }
    }
    return r;
}

}  // namespace

namespace {

ProjElem divide_termwise(const ProjElem& x, bool z0, Int k)
{
    ProjSpace sp = x.space;
    stair::Sat sat = sat_of(sp);
    ProjRaw cur;
    for (auto& [m, c] : x.terms)
        cur.push_back({c, m});
    for (Int step = 0; step < k; ++step) {
        ProjElem norm = reduce(sp, cur);
        cur.clear();
        for (auto& [key, c] : norm.terms) {
            ProjMonomial m = key;
            Int& own = z0 ? m.a : m.b;
            bool invertible = z0 ? sat.i_sat(m.i) : sat.j_sat(m.j);
            if (own >= 1 || invertible) {
                own -= 1;
                cur.push_back({c, m});
                continue;
            }
            auto q = divide_by_xi(c);
            if (!q)
                fail(ErrorKind::NotDivisible, eqq::to_string(m) + " is not divisible by " + (z0 ? "z0" : "z1"));
            (z0 ? m.b : m.a) += 1;
            cur.push_back({*q, m});
        }
    }
    return reduce(sp, cur);
}

}  // namespace

ProjElem divide(const ProjElem& x, bool z0, Int k)
{
    if (k < 0)
        fail(ErrorKind::Range, "division exponent must be non-negative");
    try {
        return divide_termwise(x, z0, k);
    }
    catch (const Error& e) {
        if (e.kind() != ErrorKind::NotDivisible)
            throw;
        // a sum can be divisible although none of its terms is
        ProjSpace sp = x.space;
        ProjElem power = monomial(sp, {z0 ? k : 0, z0 ? 0 : k, 0, 0});
        auto y = detail::solve_division<ProjMonomial>(
            x.terms, k * (z0 ? gr::omega0 : gr::omega1), [](const ProjMonomial& m) { return grading_of(m); },
            [sp](const Grading& g) { return basis(sp.p, sp.q, g.w); },
            [&](const ProjMonomial& b, const HElem& h) { return mul(power, monomial(sp, b, h)).terms; });
        if (!y)
            throw;
        ProjElem out{sp, *y};
        if (mul(power, out) != x)
            fail(ErrorKind::Internal, "division check failed");
        return out;
    }
}

std::string descriptor(ProjSpace sp)
{
    return "proj:" + std::to_string(sp.p) + "|" + std::to_string(sp.q);
}

std::string to_string(const ProjElem& x)
{
    std::vector<std::pair<ProjMonomial, HElem>> ts(x.terms.begin(), x.terms.end());
    std::stable_sort(ts.begin(), ts.end(), [](auto& l, auto& r) {
        return l.first.i + l.first.j > r.first.i + r.first.j;
    });
    std::vector<std::pair<HElem, std::string>> parts;
    for (auto& [m, c] : ts)
        parts.push_back({c, eqq::to_string(m)});
    return render_sum(parts);
}

}  // namespace proj
}  // namespace eqq
