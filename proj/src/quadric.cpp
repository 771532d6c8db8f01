#include "eqq/quadric.hpp"

#include "eqq/errors.hpp"
#include "eqq/render.hpp"
#include "eqq/stair.hpp"
#include "zeta_solve.hpp"

#include <algorithm>
#include <optional>

namespace eqq {

Int coset_of(Int p, const QMonomial& m)
{
    Int n = m.b - m.a + m.i - m.j;
    if (m.has_m())
        n += 2 * m.m - p;
    return n;
}

Grading grading_of(Int p, const QMonomial& m)
{
    Grading g = m.a * gr::omega0 + m.b * gr::omega1 + m.i * gr::omega + m.j * gr::chi_omega;
    if (m.has_m())
        g = g + nu(p, m.m);
    return g;
}

std::string to_string(const QMonomial& m, const MonomialNames& names)
{
    std::string tail = m.has_m() ? "m[" + std::to_string(m.m) + "]" : "";
    return render_monomial(m.a, m.b, m.i, m.j, tail, names);
}

namespace quad {

namespace {

// Layer A: no m-class, no saturation. Layer B: m-classes at global position (I, J) = (i+m, j+p−m).
const stair::Sat free_sat{};
stair::Sat m_sat(Int p) { return {p, p}; }

struct Pos {
    bool b_layer;
    Int I, J;
};

Pos pos_of(Int p, const QMonomial& m)
{
    if (m.has_m())
        return {true, m.i + m.m, m.j + p - m.m};
    return {false, m.i, m.j};
}

void check_p(Int p)
{
    if (p < 1)
        fail(ErrorKind::Range, "quadric needs p >= 1");
}

// Canonical monomial at a position of coset n; the m-index is the one closest to s_n.
QMonomial at_position(Int p, Int n, bool b_layer, Int I, Int J)
{
    if (!b_layer) {
        stair::Exps e = stair::position(free_sat, n, I, J);
        return {e.a, e.b, I, J, -1};
    }
    stair::Exps e = stair::position(m_sat(p), n, I, J);
    Int t = std::clamp(s_index(p, n), std::max<Int>(0, p - J), std::min(p, I));
    return {e.a, e.b, I - t, J - (p - t), t};
}

struct Canonical {
    bool zero = false;
    HElem xi;
    QMonomial mono;
};

// Pull ξ out of raw exponents and pick the representative index. Throws `bad` on an invalid negative exponent.
Canonical canonicalize(Int p, const QMonomial& raw, ErrorKind bad)
{
    if (raw.i < 0 || raw.j < 0)
        fail(ErrorKind::Malformed, "negative power of a Chern class");
    if (raw.has_m() && raw.m > p)
        fail(ErrorKind::Range, "m-index out of range");
    Pos ps = pos_of(p, raw);
    stair::Canon c = stair::canon(ps.b_layer ? m_sat(p) : free_sat, raw.a, raw.b, ps.I, ps.J);
    Canonical out;
    if (c.zero) {
        out.zero = true;
        return out;
    }
    if (!c.valid)
        fail(bad, to_string(raw) + " is not a class of " + descriptor(p));
    out.xi = HElem::xi(c.xi);
    Int n = coset_of(p, raw);
    out.mono = at_position(p, n, ps.b_layer, ps.I, ps.J);
    return out;
}

void accumulate(std::map<QMonomial, HElem>& acc, const QMonomial& m, const HElem& c)
{
    if (c.is_zero())
        return;
    HElem& slot = acc[m];
    slot += c;
    if (slot.is_zero())
        acc.erase(m);
}

void accumulate_raw(Int p, std::map<QMonomial, HElem>& acc, const QMonomial& raw, const HElem& c, ErrorKind bad)
{
    if (c.is_zero())
        return;
    Canonical k = canonicalize(p, raw, bad);
    if (!k.zero)
        accumulate(acc, k.mono, c * k.xi);
}

// Per-coset staircases of both layers.
struct CosetStairs {
    Int s;
    std::vector<std::pair<Int, Int>> a_layer;  // levels 0..p−1
    std::vector<std::pair<Int, Int>> b_layer;  // levels p−1..2p−2
};

class Stairs {
public:
    explicit Stairs(Int p) : p_(p) {}
    const CosetStairs& get(Int n)
    {
        auto it = cache_.find(n);
        if (it != cache_.end())
            return it->second;
        CosetStairs cs;
        cs.s = s_index(p_, n);
        cs.a_layer = stair::staircase({cs.s, p_ - cs.s}, n, p_);
        cs.b_layer = stair::staircase(m_sat(p_), n, p_, {cs.s, p_ - cs.s});
        return cache_.emplace(n, std::move(cs)).first->second;
    }

private:
    Int p_;
    std::map<Int, CosetStairs> cache_;
};

bool on_stair(Int p, Stairs& st, const QMonomial& m)
{
    Int n = coset_of(p, m);
    Pos ps = pos_of(p, m);
    const CosetStairs& cs = st.get(n);
    Int level = level_of(p, m);
    std::pair<Int, Int> want;
    if (!ps.b_layer) {
        if (level > p - 1)
            return false;
        want = cs.a_layer[level];
    }
    else {
        if (level > 2 * p - 2)
            return false;
        want = cs.b_layer[level - (p - 1)];
    }
    if (want != std::pair{ps.I, ps.J})
        return false;
    return at_position(p, n, ps.b_layer, ps.I, ps.J) == m;
}

}  // namespace

Int level_of(Int p, const QMonomial& m) { return m.has_m() ? m.i + m.j + p - 1 : m.i + m.j; }

QElem zero(Int p)
{
    check_p(p);
    return {p, {}};
}

QElem scalar(Int p, const HElem& c) { return reduce(p, {{c, QMonomial{}}}); }

QElem monomial(Int p, const QMonomial& m, const HElem& c) { return reduce(p, {{c, m}}); }

QElem m_class(Int p, Int s)
{
    check_p(p);
    if (s < 0 || s > p)
        fail(ErrorKind::Range, "m-index must lie in 0..p");
    return monomial(p, {0, 0, 0, 0, s});
}

QElem add(const QElem& x, const QElem& y)
{
    if (x.p != y.p)
        fail(ErrorKind::SpaceMismatch, "adding elements of " + descriptor(x.p) + " and " + descriptor(y.p));
    QElem r = x;
    for (auto& [m, c] : y.terms)
        accumulate(r.terms, m, c);
    return r;
}

QElem scale(const HElem& c, const QElem& x)
{
    QElem r{x.p, {}};
    for (auto& [m, d] : x.terms)
        accumulate(r.terms, m, c * d);
    return r;
}

QElem sub(const QElem& x, const QElem& y) { return add(x, scale(HElem(-1), y)); }

std::vector<std::pair<Int, QMonomial>> mm_product(Int p, Int a, Int b)
{
    // m_a m_{p−a} = 0; walk b toward p − a using (i), dividing by ζ₀ (resp. ζ₁) where it acts invertibly.
    std::vector<std::pair<Int, QMonomial>> out;
    if (a + b == p)
        return out;
    if (a + b > p) {
        // ζ₀ m_a m_b = ĉ^{b−1}ĉ_χ^{p−b} m_a − ζ₁ m_a m_{b−1}
        out.push_back({1, {0, 0, b - 1, p - b, a}});
        for (auto [c, mono] : mm_product(p, a, b - 1)) {
            mono.b += 1;
            out.push_back({-c, mono});
        }
        for (auto& [c, mono] : out)
            mono.a -= 1;
    }
    else {
        // ζ₁ m_a m_b = ĉ^bĉ_χ^{p−1−b} m_a − ζ₀ m_a m_{b+1}
        out.push_back({1, {0, 0, b, p - 1 - b, a}});
        for (auto [c, mono] : mm_product(p, a, b + 1)) {
            mono.a += 1;
            out.push_back({-c, mono});
        }
        for (auto& [c, mono] : out)
            mono.b -= 1;
    }
    return out;
}

QRaw raw_product(Int p, const QRaw& x, const QRaw& y, const QuadricStrategy& how)
{
    QRaw out;
    for (auto& [c1, m1] : x)
        for (auto& [c2, m2] : y) {
            HElem c = c1 * c2;
            if (c.is_zero())
                continue;
            QMonomial sum{m1.a + m2.a, m1.b + m2.b, m1.i + m2.i, m1.j + m2.j, -1};
            if (m1.has_m() && m2.has_m()) {
                Int lo = std::min(m1.m, m2.m), hi = std::max(m1.m, m2.m);
                Int base = how.high_base ? hi : lo, other = how.high_base ? lo : hi;
                for (auto& [k, t] : mm_product(p, base, other))
                    out.push_back({HElem(k) * c, {sum.a + t.a, sum.b + t.b, sum.i + t.i, sum.j + t.j, t.m}});
                continue;
            }
            sum.m = m1.has_m() ? m1.m : m2.m;
            out.push_back({c, sum});
        }
    return out;
}

namespace {

QElem reduce_impl(Int p, const QRaw& raw, const QuadricStrategy& how, ErrorKind bad)
{
    check_p(p);
    std::map<QMonomial, HElem> acc;
    for (auto& [c, m] : raw)
        accumulate_raw(p, acc, m, c, bad);

    Stairs st(p);
    const ErrorKind internal = ErrorKind::InternalNonDivisible;
    while (true) {
        std::optional<QMonomial> best;
        std::tuple<Int, int, Int> best_key{};
        for (auto& [m, c] : acc) {
            if (on_stair(p, st, m))
                continue;
            Int level = level_of(p, m);
            Pos ps = pos_of(p, m);
            int layer_rank = 0;
            if (level >= p)
                layer_rank = ps.b_layer ? 0 : 1;
            else if (level == p - 1)
                layer_rank = ps.b_layer ? 1 : 0;
            Int dist = 0;
            const CosetStairs& cs = st.get(coset_of(p, m));
            if (!ps.b_layer && level <= p - 1)
                dist = std::llabs(ps.I - cs.a_layer[level].first);
            else if (ps.b_layer && level <= 2 * p - 2)
                dist = std::llabs(ps.I - cs.b_layer[level - (p - 1)].first);
            std::tuple<Int, int, Int> key{level, layer_rank, dist};
            if (!best || key > best_key) {
                best = m;
                best_key = key;
            }
        }
        if (!best)
            break;
        QMonomial m = *best;
        HElem c = acc[m];
        acc.erase(m);
        Int n = coset_of(p, m);
        Int level = std::get<0>(best_key);
        Pos ps = pos_of(p, m);
        const CosetStairs& cs = st.get(n);

        if (!ps.b_layer && level >= p) {
            // (i): ĉ^{s'}ĉ_χ^{p−1−s'} = ζ₀m_{s'+1} + ζ₁m_{s'}
            Int lo = std::max<Int>(0, p - 1 - m.j), hi = std::min<Int>(m.i, p - 1);
            Int sp = how.high_split ? hi : lo;
            QMonomial rest{m.a, m.b, m.i - sp, m.j - (p - 1 - sp), -1};
            QMonomial t0 = rest, t1 = rest;
            t0.a += 1;
            t0.m = sp + 1;
            t1.b += 1;
            t1.m = sp;
            accumulate_raw(p, acc, t0, c, internal);
            accumulate_raw(p, acc, t1, c, internal);
            continue;
        }
        if (ps.b_layer && level == p - 1) {
            // bottom of the m-layer: slide m_t toward m_s with (i)
            Int t = ps.I, s = cs.s;
            if (t < s && m.a == 0 && m.b >= 1) {
                Int e = m.b;
                accumulate_raw(p, acc, {0, e - 1, t, p - 1 - t, -1}, c, internal);
                accumulate_raw(p, acc, {1, e - 1, 0, 0, t + 1}, -c, internal);
                continue;
            }
            if (t > s && m.b == 0 && m.a >= 1) {
                Int a = m.a;
                accumulate_raw(p, acc, {a - 1, 0, t - 1, p - t, -1}, c, internal);
                accumulate_raw(p, acc, {a - 1, 1, 0, 0, t - 1}, -c, internal);
                continue;
            }
            fail(ErrorKind::Internal, "no slide applies to " + to_string(m) + " in " + descriptor(p));
        }
        const stair::Sat& sat = ps.b_layer ? m_sat(p) : free_sat;
        bool toward_i;
        if (ps.b_layer && level > 2 * p - 2)
            toward_i = ps.I < p;
        else {
            auto want = ps.b_layer ? cs.b_layer[level - (p - 1)] : cs.a_layer[level];
            toward_i = ps.J > want.second;
        }
        stair::Move mv = toward_i ? stair::i_ward(sat, n, ps.I, ps.J) : stair::j_ward(sat, n, ps.I, ps.J);
        if (!mv.ok)
            fail(ErrorKind::Internal, "no rewrite applies to " + to_string(m) + " in " + descriptor(p));
        if (!mv.target_zero)
            accumulate(acc, at_position(p, n, ps.b_layer, mv.target.first, mv.target.second),
                       c * HElem::one_minus_kappa() * HElem::xi(mv.k));
        if (!mv.lower_zero)
            accumulate(acc, at_position(p, n, ps.b_layer, mv.lower.first, mv.lower.second), c * HElem::e(2));
    }
    return {p, std::move(acc)};
}

QRaw to_raw(const QElem& x)
{
    QRaw r;
    for (auto& [m, c] : x.terms)
        r.push_back({c, m});
    return r;
}

}  // namespace

QElem reduce(Int p, const QRaw& raw, const QuadricStrategy& how)
{
    return reduce_impl(p, raw, how, ErrorKind::NotDivisible);
}

QElem mul(const QElem& x, const QElem& y, const QuadricStrategy& how)
{
    if (x.p != y.p)
        fail(ErrorKind::SpaceMismatch, "multiplying elements of " + descriptor(x.p) + " and " + descriptor(y.p));
    return reduce_impl(x.p, raw_product(x.p, to_raw(x), to_raw(y), how), how, ErrorKind::InternalNonDivisible);
}

QElem pow(const QElem& x, Int k, const QuadricStrategy& how)
{
    if (k < 0)
        fail(ErrorKind::Malformed, "negative power of a ring element");
    QElem r = scalar(x.p, HElem(1));
    for (Int t = 0; t < k; ++t)
        r = mul(r, x, how);
    return r;
}

std::vector<QMonomial> basis(Int p, Int n)
{
    check_p(p);
    Stairs st(p);
    const CosetStairs& cs = st.get(n);
    std::vector<QMonomial> out;
    for (auto [I, J] : cs.a_layer) {
        QMonomial m = at_position(p, n, false, I, J);
        out.push_back(m);
    }
    for (auto [I, J] : cs.b_layer)
        out.push_back(at_position(p, n, true, I, J));
    return out;
}

bool is_basis_monomial(Int p, const QMonomial& m)
{
    Stairs st(p);
    return on_stair(p, st, m);
}

std::vector<LatticeEntry> ro2_basis(Int p)
{
    std::vector<LatticeEntry> out;
    for (auto& m : basis(p, 0)) {
        Grading g = grading_of(p, m);
        out.push_back({m, g.u, g.s});
    }
    return out;
}

namespace {

// ξ^{-1}·c when every symbol of c is a multiple of ξ.
std::optional<HElem> divide_by_xi(const HElem& c)
{
    HElem r;
    Burnside u = c.unit();
    if (u.a != 0)
        return std::nullopt;
    if (u.b != 0)
        r += HElem(u.b) * HElem::tau_neg(2);  // g = ξ·τ(ι^{−2})
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

// Peels ζ off term by term, borrowing from ξ in coefficients where needed.
QElem divide_termwise(const QElem& x, Zeta which, Int k)
{
    Int p = x.p;
    QRaw cur = to_raw(x);
    for (Int step = 0; step < k; ++step) {
        QRaw next;
        QElem norm = reduce_impl(p, cur, {}, ErrorKind::NotDivisible);
        for (auto& [mono, coeff] : norm.terms) {
            QMonomial m = mono;
            Pos ps = pos_of(p, m);
            bool z0 = which == Zeta::Z0;
            Int& own = z0 ? m.a : m.b;
            bool invertible = ps.b_layer && (z0 ? ps.I >= p : ps.J >= p);
            if (own >= 1 || invertible) {
                own -= 1;
                next.push_back({coeff, m});
                continue;
            }
            auto q = divide_by_xi(coeff);
            if (!q)
                fail(ErrorKind::NotDivisible, to_string(m) + " is not divisible by " + (z0 ? "z0" : "z1"));
            if (z0)
                m.b += 1;
            else
                m.a += 1;
            next.push_back({*q, m});
        }
        cur = std::move(next);
    }
    return reduce_impl(p, cur, {}, ErrorKind::NotDivisible);
}

}  // namespace

QElem divide(const QElem& x, Zeta which, Int k)
{
    if (k < 0)
        fail(ErrorKind::Range, "division exponent must be non-negative");
    try {
        return divide_termwise(x, which, k);
    }
    catch (const Error& e) {
        if (e.kind() != ErrorKind::NotDivisible)
            throw;
        // a sum can be divisible although none of its terms is
        Int p = x.p;
        QElem power = zeta_power(p, which, k);
        auto y = detail::solve_division<QMonomial>(
            x.terms, k * (which == Zeta::Z0 ? gr::omega0 : gr::omega1), [p](const QMonomial& m) { return grading_of(p, m); },
            [p](const Grading& g) { return basis(p, g.w); },
            [&](const QMonomial& b, const HElem& h) { return mul(power, monomial(p, b, h)).terms; });
        if (!y)
            throw;
        QElem out{p, *y};
        if (mul(power, out) != x)
            fail(ErrorKind::Internal, "division check failed");
        return out;
    }
}

QElem zeta_power(Int p, Zeta which, Int k)
{
    QMonomial m;
    (which == Zeta::Z0 ? m.a : m.b) = k;
    return monomial(p, m);
}

bool is_homogeneous(const QElem& x)
{
    try {
        grading(x);
        return true;
    }
    catch (const Error&) {
        return false;
    }
}

Grading grading(const QElem& x)
{
    std::optional<Grading> g;
    for (auto& [m, c] : x.terms) {
        Grading gm = grading_of(x.p, m);
        std::vector<RO2> parts;
        if (!c.unit().is_zero())
            parts.push_back({0, 0});
        for (auto& [s, k] : c.terms())
            parts.push_back(symbol_grading(s));
        for (auto r : parts) {
            Grading total = gm + Grading{r.a, r.b, 0};
            if (g && !(*g == total))
                fail(ErrorKind::NotHomogeneous, "element is not homogeneous");
            g = total;
        }
    }
    if (!g)
        fail(ErrorKind::NotHomogeneous, "zero has no grading");
    return *g;
}

std::string descriptor(Int p) { return "quadric:" + std::to_string(p); }

std::string to_string(const QElem& x, const MonomialNames& names)
{
    std::vector<std::pair<QMonomial, HElem>> ts(x.terms.begin(), x.terms.end());
    std::stable_sort(ts.begin(), ts.end(), [&](auto& l, auto& r) {
        return level_of(x.p, l.first) > level_of(x.p, r.first);
    });
    std::vector<std::pair<HElem, std::string>> parts;
    for (auto& [m, c] : ts)
        parts.push_back({c, eqq::to_string(m, names)});
    return render_sum(parts);
}

}  // namespace quad
}  // namespace eqq
