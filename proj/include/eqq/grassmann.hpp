#pragma once
#include "eqq/quadric.hpp"
#include "eqq/restrict.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eqq::grass {

inline constexpr Int p = 3;  // Gr(2, ℂ^{3|1}) ≅ XQ⁶
inline const MonomialNames names{"z0", "z1", "cl", "cxl"};

struct RepC2 {
    Int nplus = 0, nminus = 0;
    Int rank() const { return nplus + nminus; }
    friend bool operator==(const RepC2&, const RepC2&) = default;
};

RepC2 sym_power(RepC2 r, Int k);

Grading sym3_grading();

// (ĉ_γ, ĉ_χγ) = (m₂, ζ₁²m₀)
std::pair<QElem, QElem> tautological_euler();

struct Check {
    bool ok = true;
    std::vector<std::string> trace;
};
// The chain from ζ₁²m₀ to (1−κ)ζ₀²ĉ_γ + e²ĉ_χλ; `e2_coeff` replaces the final e² coefficient (2 breaks it).
Check cxg_relation_check(Int e2_coeff = 1);

// The six relation families of the λ-presentation plus the divisibility statements.
Check presentation_check();

struct EulerResult {
    Grading grading;
    QMonomial monomial;
    NoneqElem rho_target;
    FixedElem fixed_target;
    Burnside alpha;
    QElem value;
    std::vector<std::string> trace;
};
EulerResult euler_sym3();

struct LinesReport {
    Int type_i = 0, type_ii = 0, type_iii = 0, type_iv = 0, total = 0;
    std::string c2_set;
};
LinesReport lines_report(const EulerResult& e);

// c₁^a c₂^b coefficients of ∏_{a+b=k}(a·x + b·y) for a rank-2 bundle with Chern roots x, y.
std::vector<std::pair<std::pair<Int, Int>, Int>> sym_euler_in_chern(Int k);

std::string to_string(const QElem& x);

}  // namespace eqq::grass
