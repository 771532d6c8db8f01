#pragma once
#include "eqq/grassmann.hpp"
#include "eqq/quadric.hpp"

namespace eqq::ident {

using grass::Check;

// Defining relations of the quadric ring and the ĉ^sĉ_χ^{p−s} = (ζ₀ĉ + ζ₁ĉ_χ)m_s identity, each
// verified along both derivation chains and under both rewrite strategies.
Check relations(Int p);

// Images of the three defining relations under ρ and under the fixed-point map.
Check restrictions(Int p);

// ρ(m_s m_{p−s}) = 0 in the underlying ring, read off per parity.
Check underlying_products(Int p);

// Normal form of `text` in quadric:p.
QElem eval_quadric(Int p, const std::string& text, const QuadricStrategy& how = {});

}  // namespace eqq::ident
