#pragma once
#include "eqq/grading.hpp"
#include "eqq/hpoint.hpp"
#include "eqq/projspace.hpp"
#include "eqq/render.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eqq {

// ζ₀^a ζ₁^b ĉ^i ĉ_χ^j m_m, with m = −1 when no m-class is present.
struct QMonomial {
    Int a = 0, b = 0, i = 0, j = 0;
    Int m = -1;
    bool has_m() const { return m >= 0; }
    friend auto operator<=>(const QMonomial&, const QMonomial&) = default;
};

// Rule-application choices; every choice must give the same normal form.
struct QuadricStrategy {
    bool high_split = false;   // split ĉ^iĉ_χ^j by (i) at the largest admissible index instead of the smallest
    bool high_base = false;    // in m_a·m_b keep the larger index instead of the smaller
};

struct QElem {
    Int p = 1;
    std::map<QMonomial, HElem> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const QElem&, const QElem&) = default;
};

using QRaw = std::vector<std::pair<HElem, QMonomial>>;

Int coset_of(Int p, const QMonomial& m);
Grading grading_of(Int p, const QMonomial& m);
std::string to_string(const QMonomial& m, const MonomialNames& names = {});

namespace quad {

QElem zero(Int p);
QElem scalar(Int p, const HElem& c);
QElem monomial(Int p, const QMonomial& m, const HElem& c = HElem(1));
QElem m_class(Int p, Int s);
QElem add(const QElem& x, const QElem& y);
QElem sub(const QElem& x, const QElem& y);
QElem scale(const HElem& c, const QElem& x);

QElem reduce(Int p, const QRaw& raw, const QuadricStrategy& how = {});
QElem mul(const QElem& x, const QElem& y, const QuadricStrategy& how = {});
QElem pow(const QElem& x, Int k, const QuadricStrategy& how = {});
// Multiplies raw monomials without applying relations other than the m·m elimination.
QRaw raw_product(Int p, const QRaw& x, const QRaw& y, const QuadricStrategy& how = {});

// m_a·m_b as a raw combination of monomials carrying a single m_a.
std::vector<std::pair<Int, QMonomial>> mm_product(Int p, Int a, Int b);

std::vector<QMonomial> basis(Int p, Int n);
bool is_basis_monomial(Int p, const QMonomial& m);

struct LatticeEntry {
    QMonomial mono;
    Int a, b;  // grading a + bσ
};
std::vector<LatticeEntry> ro2_basis(Int p);

enum class Zeta { Z0, Z1 };
QElem divide(const QElem& x, Zeta which, Int k);
QElem zeta_power(Int p, Zeta which, Int k);

// Single grading of a nonzero element (coefficient gradings included); NotHomogeneous otherwise.
Grading grading(const QElem& x);
bool is_homogeneous(const QElem& x);

std::string descriptor(Int p);
std::string to_string(const QElem& x, const MonomialNames& names = {});

// Level of a canonical monomial: half its rank.
Int level_of(Int p, const QMonomial& m);

}  // namespace quad
}  // namespace eqq
