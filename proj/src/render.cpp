#include "eqq/render.hpp"

#include <cstdlib>

namespace eqq {

std::string render_monomial(Int a, Int b, Int i, Int j, const std::string& tail, const MonomialNames& names)
{
    std::string out;
    auto put = [&](const char* base, Int k) {
        if (k == 0)
            return;
        if (!out.empty())
            out += " ";
        out += base;
        if (k != 1)
            out += "^" + std::to_string(k);
    };
    put(names.z0, a);
    put(names.z1, b);
    put(names.c, i);
    put(names.cx, j);
    if (!tail.empty()) {
        if (!out.empty())
            out += " ";
        out += tail;
    }
    return out.empty() ? "1" : out;
}

namespace {

// Returns the sign (+1/−1) pulled out of the coefficient and the text to print in front of a monomial.
std::pair<int, std::string> coefficient_prefix(const HElem& c)
{
    if (c.size() == 1 && c.terms().empty()) {
        Burnside u = c.unit();
        if (u.b == 0)
            return {u.a < 0 ? -1 : 1, std::to_string(std::llabs(u.a))};
        if (u.a == 0) {
            std::string body = std::llabs(u.b) == 1 ? "g" : std::to_string(std::llabs(u.b)) + "g";
            return {u.b < 0 ? -1 : 1, body};
        }
        if (u == Burnside::kappa() || -u == Burnside::kappa())
            return {u == Burnside::kappa() ? 1 : -1, "kappa"};
        return {1, "(" + to_coeff_string(u) + ")"};
    }
    if (c.size() == 1) {
        auto& [s, k] = *c.terms().begin();
        std::string body = to_string(s);
        if (std::llabs(k) != 1)
            body = std::to_string(std::llabs(k)) + " " + body;
        return {k < 0 ? -1 : 1, body};
    }
    return {1, "(" + to_string(c) + ")"};
}

}  // namespace

std::string render_sum(const std::vector<std::pair<HElem, std::string>>& terms)
{
    std::string out;
    for (auto& [c, mono] : terms) {
        if (c.is_zero())
            continue;
        auto [sign, prefix] = coefficient_prefix(c);
        std::string body;
        if (mono == "1")
            body = prefix;
        else if (prefix == "1")
            body = mono;
        else
            body = prefix + " " + mono;
        if (out.empty())
            out = (sign < 0 ? "-" : "") + body;
        else
            out += (sign < 0 ? " - " : " + ") + body;
    }
    // a lone scalar needs no grouping
    if (terms.size() == 1 && terms[0].second == "1" && out.size() > 2 && out.front() == '(' && out.back() == ')')
        return out.substr(1, out.size() - 2);
    return out.empty() ? "0" : out;
}

}  // namespace eqq
