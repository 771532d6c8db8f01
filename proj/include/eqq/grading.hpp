#pragma once
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace eqq {

using Int = std::int64_t;

// u·1 + s·σ + w·Ω₁, with Ω₀ already rewritten as −Ω₁ + 2σ − 2.
struct Grading {
    Int u = 0, s = 0, w = 0;

    friend Grading operator+(Grading x, Grading y) { return {x.u + y.u, x.s + y.s, x.w + y.w}; }
    friend Grading operator-(Grading x, Grading y) { return {x.u - y.u, x.s - y.s, x.w - y.w}; }
    friend Grading operator-(Grading x) { return {-x.u, -x.s, -x.w}; }
    friend Grading operator*(Int k, Grading x) { return {k * x.u, k * x.s, k * x.w}; }
    friend auto operator<=>(const Grading&, const Grading&) = default;
};

Grading make_grading(Int u, Int s, Int o0, Int o1);

namespace gr {
inline constexpr Grading one{1, 0, 0};
inline constexpr Grading sigma{0, 1, 0};
inline constexpr Grading omega1{0, 0, 1};
inline constexpr Grading omega0{-2, 2, -1};
inline constexpr Grading omega{2, 0, 1};
inline constexpr Grading chi_omega{0, 2, -1};
}  // namespace gr

Int rank(Grading g);
std::pair<Int, Int> fixed_dims(Grading g);

// Grading of m_s on the quadric of dimension 2p−2.
Grading nu(Int p, Int s);

// Which m_s carries the basis of coset nΩ₁.
Int s_index(Int p, Int n);

// n = w, remainder a + bσ.
struct Coset {
    Int n;
    Int a, b;
};
Coset coset(Grading g);

// Recover a grading from rank and fixed dimensions (pure RO(C₂) part has w computed from the difference).
Grading grading_from_dims(Int rank, Int fixed0, Int fixed1);

std::string to_string(Grading g);
// Accepts the rendering grammar, e.g. "8 + 2Ω₁", "-3Ω₁ + 4σ", also ASCII "s" / "W".
Grading parse_grading(const std::string& text);

}  // namespace eqq
