#include "eqq/burnside.hpp"

#include "eqq/errors.hpp"

#include <cstdlib>

namespace eqq {

Burnside solve(Int r, Int f)
{
    if ((r - f) % 2 != 0)
        fail(ErrorKind::Parity, "no Burnside element with rho " + std::to_string(r) + " and fixed " + std::to_string(f));
    return {f, (r - f) / 2};
}

namespace {

std::string linear(Int c0, Int c1, const std::string& sym, bool spaced)
{
    std::string out;
    if (c0 != 0)
        out = std::to_string(c0);
    if (c1 != 0) {
        Int a = std::llabs(c1);
        std::string body = (a == 1 ? std::string() : std::to_string(a)) + sym;
        if (out.empty())
            out = (c1 < 0 ? "-" : "") + body;
        else if (spaced)
            out += (c1 < 0 ? " - " : " + ") + body;
        else
            out += (c1 < 0 ? "-" : "+") + body;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(Burnside x) { return linear(x.a, x.b, "g", true); }

std::string to_coeff_string(Burnside x)
{
    // a + bg = (a + 2b) − bκ
    Int ka = x.a + 2 * x.b, kb = -x.b;
    bool use_kappa = x.b != 0 && (std::llabs(ka) < std::llabs(x.a) || (std::llabs(ka) == std::llabs(x.a) && x.a < 0));
    if (use_kappa)
        return linear(ka, kb, "kappa", false);
    return linear(x.a, x.b, "g", true);
}

}  // namespace eqq
