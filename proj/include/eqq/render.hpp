#pragma once
#include "eqq/hpoint.hpp"

#include <string>
#include <vector>

namespace eqq {

struct MonomialNames {
    const char* z0 = "z0";
    const char* z1 = "z1";
    const char* c = "cw";
    const char* cx = "cxw";
};

// "z0^-1 cw cxw^2", "1" for the empty monomial; `tail` (e.g. "m[2]") is appended last.
std::string render_monomial(Int a, Int b, Int i, Int j, const std::string& tail = "", const MonomialNames& names = {});

// Joins coefficient/monomial pairs: "(1-kappa) z0 cw + e^2", "-2 cw", "0" when empty.
std::string render_sum(const std::vector<std::pair<HElem, std::string>>& terms);

}  // namespace eqq
