#pragma once
#include "eqq/grading.hpp"

#include <compare>
#include <string>

namespace eqq {

// a·[C₂/C₂] + b·[C₂/e] in A(C₂); g = [C₂/e], κ = 2 − g.
struct Burnside {
    Int a = 0, b = 0;

    static Burnside g() { return {0, 1}; }
    static Burnside kappa() { return {2, -1}; }

    bool is_zero() const { return a == 0 && b == 0; }
    friend Burnside operator+(Burnside x, Burnside y) { return {x.a + y.a, x.b + y.b}; }
    friend Burnside operator-(Burnside x, Burnside y) { return {x.a - y.a, x.b - y.b}; }
    friend Burnside operator-(Burnside x) { return {-x.a, -x.b}; }
    friend Burnside operator*(Burnside x, Burnside y) { return {x.a * y.a, x.a * y.b + y.a * x.b + 2 * x.b * y.b}; }
    friend Burnside operator*(Int k, Burnside x) { return {k * x.a, k * x.b}; }
    friend auto operator<=>(const Burnside&, const Burnside&) = default;
};

// Underlying-set cardinality.
inline Int rho(Burnside x) { return x.a + 2 * x.b; }
// Fixed-point cardinality.
inline Int fixed(Burnside x) { return x.a; }

// Inverse of (rho, fixed); ParityError when r − f is odd.
Burnside solve(Int r, Int f);

// "3 + 12g", "g", "-1 + g".
std::string to_string(Burnside x);
// Short form used as a coefficient: prefers the κ-spelling when it is not longer, e.g. "1-kappa", "kappa".
std::string to_coeff_string(Burnside x);

}  // namespace eqq
