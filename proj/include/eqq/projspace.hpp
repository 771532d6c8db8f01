#pragma once
#include "eqq/grading.hpp"
#include "eqq/hpoint.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eqq {

struct ProjSpace {
    Int p = 1, q = 1;
    friend bool operator==(const ProjSpace&, const ProjSpace&) = default;
};

// ζ₀^a ζ₁^b ĉ^i ĉ_χ^j
struct ProjMonomial {
    Int a = 0, b = 0, i = 0, j = 0;
    friend auto operator<=>(const ProjMonomial&, const ProjMonomial&) = default;
};

Int coset_of(const ProjMonomial& m);
Grading grading_of(const ProjMonomial& m);
std::string to_string(const ProjMonomial& m);

struct ProjElem {
    ProjSpace space;
    std::map<ProjMonomial, HElem> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const ProjElem&, const ProjElem&) = default;
};

// Raw formal combination: exponents may be anything, relations not yet applied.
using ProjRaw = std::vector<std::pair<HElem, ProjMonomial>>;

namespace proj {

ProjElem zero(ProjSpace sp);
ProjElem monomial(ProjSpace sp, const ProjMonomial& m, const HElem& c = HElem(1));
ProjElem scalar(ProjSpace sp, const HElem& c);
ProjElem add(const ProjElem& x, const ProjElem& y);
ProjElem scale(const HElem& c, const ProjElem& x);
ProjElem neg(const ProjElem& x);

// Normal form; NotDivisible if a negative exponent sits where ζ is not invertible.
ProjElem reduce(ProjSpace sp, const ProjRaw& raw);
ProjElem mul(const ProjElem& x, const ProjElem& y);
ProjElem pow(const ProjElem& x, Int k);

std::vector<ProjMonomial> basis(Int p, Int q, Int n);
std::vector<std::pair<Int, Int>> staircase(Int p, Int q, Int n);
bool is_basis_monomial(ProjSpace sp, const ProjMonomial& m);

std::map<ProjMonomial, HElem> express_in_basis(const ProjElem& x);

// y with ζ₀^k·y = x (z0 = true) or ζ₁^k·y = x; NotDivisible otherwise.
ProjElem divide(const ProjElem& x, bool z0, Int k);

std::string descriptor(ProjSpace sp);
std::string to_string(const ProjElem& x);

}  // namespace proj
}  // namespace eqq
