#include "eqq/stair.hpp"

#include <algorithm>
#include <cstdlib>

namespace eqq::stair {

Canon canon(const Sat& sat, Int a, Int b, Int I, Int J)
{
    Canon c;
    bool si = sat.i_sat(I), sj = sat.j_sat(J);
    if (si && sj) {
        c.zero = true;
        return c;
    }
    if (si) {
        // ζ₁ = ξζ₀^{−1} here
        if (b < 0)
            c.valid = false;
        c.xi = b;
        c.e = {a - b, 0};
    }
    else if (sj) {
        if (a < 0)
            c.valid = false;
        c.xi = a;
        c.e = {0, b - a};
    }
    else {
        if (a < 0 || b < 0)
            c.valid = false;
        c.xi = std::min(a, b);
        c.e = {a - c.xi, b - c.xi};
    }
    return c;
}

Exps position(const Sat& sat, Int n, Int I, Int J)
{
    Int e = n - I + J;  // ζ₁-exponent when non-negative
    if (sat.i_sat(I))
        return {-e, 0};
    if (sat.j_sat(J))
        return {0, e};
    return e >= 0 ? Exps{0, e} : Exps{-e, 0};
}

std::vector<std::pair<Int, Int>> staircase(const Sat& sat, Int n, Int len, std::pair<Int, Int> start)
{
    std::vector<std::pair<Int, Int>> out;
    auto [I, J] = start;
    for (Int t = 0; t < len; ++t) {
        if (t > 0) {
            if (sat.i_sat(I))
                ++J;
            else if (sat.j_sat(J))
                ++I;
            else {
                Int ei = std::llabs(n - (I + 1) + J);
                Int ej = std::llabs(n - I + (J + 1));
                if (ei <= ej)
                    ++I;
                else
                    ++J;
            }
        }
        out.emplace_back(I, J);
    }
    return out;
}

Move i_ward(const Sat& sat, Int n, Int I, Int J)
{
    Move mv;
    if (J < 1)
        return mv;
    Exps m = position(sat, n, I, J);
    Exps low = position(sat, n, I, J - 1);
    mv.lower = {I, J - 1};
    mv.lower_zero = sat.i_sat(I) && sat.j_sat(J - 1);
    if (mv.lower_zero)
        return mv;
    // lower·ζ₁ĉ_χ must be exactly M
    Canon lhs = canon(sat, low.a, low.b + 1, I, J);
    if (lhs.zero || !lhs.valid || lhs.xi != 0 || !(lhs.e == m))
        return mv;
    Canon rhs = canon(sat, low.a + 1, low.b, I + 1, J - 1);
    if (!rhs.valid)
        return mv;
    mv.ok = true;
    mv.target = {I + 1, J - 1};
    mv.target_zero = rhs.zero;
    mv.k = rhs.xi;
    return mv;
}

Move j_ward(const Sat& sat, Int n, Int I, Int J)
{
    Move mv;
    if (I < 1)
        return mv;
    Exps m = position(sat, n, I, J);
    Exps low = position(sat, n, I - 1, J);
    mv.lower = {I - 1, J};
    mv.lower_zero = sat.i_sat(I - 1) && sat.j_sat(J);
    if (mv.lower_zero)
        return mv;
    Canon lhs = canon(sat, low.a + 1, low.b, I, J);
    if (lhs.zero || !lhs.valid || lhs.xi != 0 || !(lhs.e == m))
        return mv;
    Canon rhs = canon(sat, low.a, low.b + 1, I - 1, J + 1);
    if (!rhs.valid)
        return mv;
    mv.ok = true;
    mv.target = {I - 1, J + 1};
    mv.target_zero = rhs.zero;
    mv.k = rhs.xi;
    return mv;
}

}  // namespace eqq::stair
