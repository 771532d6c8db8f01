#pragma once
#include "eqq/burnside.hpp"
#include "eqq/quadric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eqq {

// Integer-graded ring of the underlying quadric, basis c^k (k ≤ p−2), m0, m1, c^k m0 (1 ≤ k ≤ p−1).
struct NoneqElem {
    Int p = 1;
    // key (k, which) is c^k·m_which, with which = −1 for no m-class
    std::map<std::pair<Int, int>, Int> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const NoneqElem&, const NoneqElem&) = default;
};

// Pair of elements of ℤ[c]/(c^p) over the two fixed components, with degree tags.
struct FixedElem {
    Int p = 1;
    std::vector<Int> comp0, comp1;  // coefficient of c^k, length p
    Int deg0 = 0, deg1 = 0;

    bool is_zero() const;
    friend bool operator==(const FixedElem&, const FixedElem&) = default;
};

namespace noneq {

NoneqElem zero(Int p);
NoneqElem constant(Int p, Int k);
NoneqElem c_power(Int p, Int k);
NoneqElem m(Int p, int which);
// c^k·m_which (which = −1: no m) reduced to the basis
NoneqElem monomial(Int p, Int k, int which, Int coeff = 1);
NoneqElem add(const NoneqElem& x, const NoneqElem& y);
NoneqElem scale(Int k, const NoneqElem& x);
NoneqElem mul(const NoneqElem& x, const NoneqElem& y);
std::vector<std::pair<Int, int>> basis(Int p);
std::string to_string(const NoneqElem& x);

}  // namespace noneq

namespace fixedring {

FixedElem zero(Int p, Int deg0 = 0, Int deg1 = 0);
// (coeff0·c^k0, coeff1·c^k1) with c^p = 0, degrees 2k
FixedElem pair(Int p, Int coeff0, Int k0, Int coeff1, Int k1);
FixedElem add(const FixedElem& x, const FixedElem& y);
FixedElem scale(Int k, const FixedElem& x);
FixedElem mul(const FixedElem& x, const FixedElem& y);
std::string to_string(const FixedElem& x);

}  // namespace fixedring

// ρ: ζ ↦ 1, ĉ, ĉ_χ ↦ c, m_s ↦ m_{s mod 2}, coefficients through ℍ → ℤ[ι^{±1}] → ℤ.
NoneqElem rho_quadric(const QElem& x);
// Fixed points: ζ₀ ↦ (0,1), ζ₁ ↦ (1,0), ĉ ↦ (c,1), ĉ_χ ↦ (1,c), m_s ↦ (c^s, c^{p−s}).
FixedElem fixed_quadric(const QElem& x);

// α with α·M restricting to the two targets; InconsistentTargets when they are not proportional to M's images.
Burnside solve_burnside_coeff(Int p, const QMonomial& target, const NoneqElem& rho_target, const FixedElem& fixed_target);

}  // namespace eqq
