#pragma once
// Random inputs for the property checks.
#include "eqq/quadric.hpp"

#include <random>
#include <string>
#include <vector>

namespace eqq::gen {

using Rng = std::mt19937_64;

inline Int pick(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

inline const QuadricStrategy strategies[] = {{false, false}, {true, true}, {true, false}, {false, true}};

inline std::string random_coefficient(Rng& rng)
{
    static const char* const coeffs[] = {"2", "(-1)", "3", "g", "(1-kappa)", "kappa", "e", "e^2", "xi", "(3 + 12g)", "(e^2 + xi)"};
    return coeffs[pick(rng, 0, 10)];
}

// A random sum of products of generators of quadric:p, written in the surface syntax.
inline std::string random_expression(Rng& rng, Int p, bool grass)
{
    std::vector<std::string> gens{"z0", "z1", grass ? "cl" : "cw", grass ? "cxl" : "cxw"};
    for (Int s = 0; s <= p; ++s)
        gens.push_back("m[" + std::to_string(s) + "]");
    if (grass) {
        gens.push_back("cg");
        gens.push_back("cxg");
    }
    std::string out;
    for (int t = 0, terms = int(pick(rng, 1, 3)); t < terms; ++t) {
        std::string term = pick(rng, 0, 2) == 0 ? random_coefficient(rng) : "1";
        for (int f = 0, n = int(pick(rng, 1, 5)); f < n; ++f) {
            term += " " + gens[size_t(pick(rng, 0, Int(gens.size()) - 1))];
            if (pick(rng, 0, 3) == 0)
                term += "^" + std::to_string(pick(rng, 2, 3));
        }
        out += (out.empty() ? "" : pick(rng, 0, 1) ? " + " : " - ") + term;
    }
    return out;
}

inline HElem random_homogeneous_coeff(Rng& rng)
{
    switch (pick(rng, 0, 4)) {
    case 0: return HElem(pick(rng, 1, 4));
    case 1: return HElem(Burnside{pick(rng, -3, 3), pick(rng, 1, 3)});
    case 2: return HElem::e(pick(rng, 1, 3));
    case 3: return HElem::xi(pick(rng, 1, 2));
    default: return HElem(-1);
    }
}

inline QElem random_basis_element(Rng& rng, Int p)
{
    auto b = quad::basis(p, pick(rng, -2 * p - 2, 2 * p + 2));
    return quad::monomial(p, b[size_t(pick(rng, 0, 2 * p - 1))], random_homogeneous_coeff(rng));
}

}  // namespace eqq::gen
