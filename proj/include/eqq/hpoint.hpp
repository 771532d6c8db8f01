#pragma once
#include "eqq/burnside.hpp"

#include <compare>
#include <map>
#include <string>

namespace eqq {

// ℤ[ι^{±1}], deg ι = σ − 1.
struct IotaElem {
    std::map<Int, Int> terms;  // exponent -> coefficient

    static IotaElem mono(Int k, Int c = 1);
    bool is_zero() const { return terms.empty(); }
    Int at(Int k) const;
    Int augmentation() const;  // sum of coefficients (ι ↦ 1)
    friend IotaElem operator+(const IotaElem& x, const IotaElem& y);
    friend IotaElem operator*(const IotaElem& x, const IotaElem& y);
    friend IotaElem operator*(Int k, const IotaElem& x);
    friend bool operator==(const IotaElem&, const IotaElem&) = default;
};

enum class HKind { Unit, E, Xi, EXi, NegKappa, TauNeg };

// e^x, ξ^x, e^x ξ^y, e^{−x}κ, τ(ι^{−x}).
struct HSymbol {
    HKind kind = HKind::Unit;
    Int x = 0, y = 0;
    friend auto operator<=>(const HSymbol&, const HSymbol&) = default;
};

struct RO2 {
    Int a = 0, b = 0;  // a + bσ
    friend auto operator<=>(const RO2&, const RO2&) = default;
};

RO2 symbol_grading(const HSymbol& s);
bool is_torsion(const HSymbol& s);

// Element of ℍ on the charted region.
class HElem {
public:
    HElem() = default;
    HElem(Int k) : unit_{k, 0} {}
    HElem(Burnside b) : unit_(b) {}

    static HElem e(Int a);
    static HElem xi(Int b);
    static HElem e_xi(Int a, Int b);
    static HElem neg_kappa(Int m);
    static HElem tau_neg(Int n);
    static HElem kappa() { return HElem(Burnside::kappa()); }
    static HElem g() { return HElem(Burnside::g()); }
    static HElem one_minus_kappa() { return HElem(Burnside{-1, 1}); }
    static HElem symbol(const HSymbol& s, Int c = 1);

    const Burnside& unit() const { return unit_; }
    const std::map<HSymbol, Int>& terms() const { return terms_; }
    bool is_zero() const { return unit_.is_zero() && terms_.empty(); }
    bool is_one() const { return unit_ == Burnside{1, 0} && terms_.empty(); }
    // Number of nonzero symbol slots (unit counts as one).
    size_t size() const { return terms_.size() + (unit_.is_zero() ? 0 : 1); }

    HElem& operator+=(const HElem& y);
    friend HElem operator+(HElem x, const HElem& y) { return x += y; }
    friend HElem operator-(const HElem& x);
    friend HElem operator-(const HElem& x, const HElem& y) { return x + (-y); }
    friend HElem operator*(const HElem& x, const HElem& y);
    friend bool operator==(const HElem&, const HElem&) = default;
    friend auto operator<=>(const HElem& x, const HElem& y)
    {
        if (auto c = x.unit_ <=> y.unit_; c != 0)
            return c;
        return x.terms_ <=> y.terms_;
    }

private:
    void add_symbol(const HSymbol& s, Int c);
    Burnside unit_;
    std::map<HSymbol, Int> terms_;
};

HElem pow(const HElem& x, Int k);

// Descriptor returned by group_at.
struct HGroup {
    enum Kind { Zero, Z, Z2, BurnsideSlot } kind = Zero;
    HSymbol generator;
};
HGroup group_at(RO2 g);

IotaElem rho(const HElem& x);
HElem tau(const IotaElem& x);
Int fixed(const HElem& x);

// Single-grading check; NotHomogeneous otherwise (zero has no grading).
bool homogeneous_grading(const HElem& x, RO2& out);

std::string to_string(const HSymbol& s);
std::string to_string(const HElem& x);
std::string to_string(const IotaElem& x);

}  // namespace eqq
