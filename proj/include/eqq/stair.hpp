#pragma once
// Position bookkeeping shared by the projective-space and quadric engines.
//
// Inside one coset nΩ₁ a monomial ζ^·ĉ^Iĉ_χ^J is pinned down, up to a power of ξ,
// by the pair (I, J). Past I ≥ p the class ζ₀ acts invertibly, past J ≥ q so does ζ₁,
// and when both hold the monomial vanishes.
#include "eqq/grading.hpp"

#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace eqq::stair {

inline constexpr Int unbounded = std::numeric_limits<Int>::max() / 4;

struct Sat {
    Int p = unbounded, q = unbounded;
    bool i_sat(Int I) const { return I >= p; }
    bool j_sat(Int J) const { return J >= q; }
};

struct Exps {
    Int a = 0, b = 0;
    friend bool operator==(const Exps&, const Exps&) = default;
};

// Canonical ζ-exponents for raw (a, b) at position (I, J), pulling ξ^xi out.
struct Canon {
    bool zero = false;
    bool valid = true;  // false when a negative exponent is not allowed here
    Int xi = 0;
    Exps e;
};
Canon canon(const Sat& sat, Int a, Int b, Int I, Int J);

// ζ-exponents of the unique canonical monomial of coset n at position (I, J).
Exps position(const Sat& sat, Int n, Int I, Int J);

// Staircase of length `len` starting at `start` (ties go to I, saturation forces the other coordinate).
std::vector<std::pair<Int, Int>> staircase(const Sat& sat, Int n, Int len, std::pair<Int, Int> start = {0, 0});

// One application of ζ₁ĉ_χ = (1−κ)ζ₀ĉ + e² read at a neighbour one level down:
//   M(I,J) = (1−κ)ξ^k · M(target) + e² · M(lower)
struct Move {
    bool ok = false;
    Int k = 0;
    bool target_zero = false;
    std::pair<Int, Int> target, lower;
    bool lower_zero = false;
};
Move i_ward(const Sat& sat, Int n, Int I, Int J);  // toward (I+1, J−1)
Move j_ward(const Sat& sat, Int n, Int I, Int J);  // toward (I−1, J+1)

}  // namespace eqq::stair
