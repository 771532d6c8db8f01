#pragma once
// Hand-written reference data shared by the unit and acceptance tests.
#include "eqq/hpoint.hpp"
#include "eqq/projspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqq::oracle {

// The explicit coset bases of the finite projective spaces, written out by formula.
inline std::vector<ProjMonomial> listed_basis(Int p, Int n)
{
    std::vector<ProjMonomial> out;
    Int an = n < 0 ? -n : n;
    if (n <= -p) {
        for (Int t = 0; t < p; ++t)
            out.push_back({an - t, 0, 0, t});
        return out;
    }
    if (n >= p) {
        for (Int t = 0; t < p; ++t)
            out.push_back({0, n - t, t, 0});
        return out;
    }
    for (Int t = 0; t <= an; ++t)
        out.push_back(n < 0 ? ProjMonomial{an - t, 0, 0, t} : ProjMonomial{0, n - t, t, 0});
    for (Int k = 1; Int(out.size()) < p; ++k) {
        out.push_back(n < 0 ? ProjMonomial{1, 0, k, an + k - 1} : ProjMonomial{1, 0, n + k, k - 1});
        out.push_back(n < 0 ? ProjMonomial{0, 0, k, an + k} : ProjMonomial{0, 0, n + k, k});
    }
    out.resize(p);
    return out;
}

inline std::string pw(const char* g, Int k) { return k == 0 ? "1" : k == 1 ? std::string(g) : std::string(g) + "^" + std::to_string(k); }

// The RO(C₂)-graded basis as listed for even and odd p, as expressions.
inline std::vector<std::string> listed_ro2(Int p)
{
    Int s = p / 2;
    std::vector<std::string> plain{"1"};
    for (Int k = 1; Int(plain.size()) < (p % 2 == 0 ? 2 * s : 2 * s + 1); ++k) {
        plain.push_back("z0 " + pw("cw", k) + " " + pw("cxw", k - 1));
        if (Int(plain.size()) < (p % 2 == 0 ? 2 * s : 2 * s + 1))
            plain.push_back(pw("cw", k) + " " + pw("cxw", k));
    }
    std::string m = "m[" + std::to_string(s) + "]";
    std::vector<std::string> out = plain;
    if (p % 2 == 0)
        for (auto& e : plain)
            out.push_back(e + " " + m);
    else {
        out.push_back("z1 " + m);
        out.push_back("cw " + m);
        for (Int k = 2; Int(out.size()) < 2 * p; ++k) {
            out.push_back("z0 " + pw("cw", k) + " " + pw("cxw", k - 2) + " " + m);
            if (Int(out.size()) < 2 * p)
                out.push_back(pw("cw", k) + " " + pw("cxw", k - 1) + " " + m);
        }
    }
    return out;
}

// The chart of the cohomology of a point, written out cell by cell.
inline std::optional<HGroup::Kind> chart(Int a, Int b)
{
    if (a == 0 && b == 0)
        return HGroup::BurnsideSlot;
    if (a == 0)
        return HGroup::Z;  // e^b above, e^{b}κ below
    if (a > 0 && b < 0) {
        if (b != -a)
            return std::nullopt;  // uncharted
        if (a == 1)
            return HGroup::Zero;
        return a % 2 == 0 ? HGroup::Z : HGroup::Z2;
    }
    if (a < 0 && a % 2 == 0 && b == -a)
        return HGroup::Z;
    if (a < 0 && a % 2 == 0 && b > -a)
        return HGroup::Z2;
    return HGroup::Zero;
}

}  // namespace eqq::oracle
