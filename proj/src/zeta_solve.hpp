#pragma once
// Division by a ζ-power as a linear problem over the coefficient groups of ℍ.
// Used when an element is divisible although none of its normal-form terms is.
#include "eqq/errors.hpp"
#include "eqq/grading.hpp"
#include "eqq/hpoint.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace eqq::detail {

// Some integer z with Σ z_k·cols[k] ≡ target, coordinate r read modulo mod[r] (0 means exact).
inline std::optional<std::vector<Int>> solve_integer(std::vector<std::vector<Int>> cols, const std::vector<Int>& target,
                                                     const std::vector<Int>& mod)
{
    size_t rows = target.size(), n = cols.size();
    for (size_t r = 0; r < rows; ++r)
        if (mod[r] != 0) {
            std::vector<Int> c(rows, 0);
            c[r] = mod[r];
            cols.push_back(c);
        }
    size_t total = cols.size();
    // U tracks the unimodular column operations: cols_now = cols_orig · U
    std::vector<std::vector<Int>> U(total, std::vector<Int>(total, 0));
    for (size_t k = 0; k < total; ++k)
        U[k][k] = 1;
    auto axpy = [&](size_t dst, size_t src, Int q) {  // col dst -= q·col src
        for (size_t r = 0; r < rows; ++r)
            cols[dst][r] -= q * cols[src][r];
        for (size_t k = 0; k < total; ++k)
            U[dst][k] -= q * U[src][k];
    };
    auto swap_cols = [&](size_t a, size_t b) {
        std::swap(cols[a], cols[b]);
        std::swap(U[a], U[b]);
    };
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, column)
    size_t c = 0;
    for (size_t r = 0; r < rows && c < total; ++r) {
        for (size_t j = c + 1; j < total; ++j)
            while (cols[j][r] != 0) {
                axpy(c, j, cols[c][r] / cols[j][r]);
                swap_cols(c, j);
            }
        if (cols[c][r] != 0)
            pivots.push_back({r, c++});
    }
    std::vector<Int> w(total, 0);
    size_t next = 0;
    for (size_t r = 0; r < rows; ++r) {
        Int val = target[r];
        for (size_t k = 0; k < total; ++k)
            val -= cols[k][r] * w[k];
        if (next < pivots.size() && pivots[next].first == r) {
            size_t pc = pivots[next++].second;
            if (val % cols[pc][r] != 0)
                return std::nullopt;
            w[pc] = val / cols[pc][r];
        }
        else if (val != 0)
            return std::nullopt;
    }
    // z = U·w restricted to the genuine unknowns
    std::vector<Int> z(n, 0);
    for (size_t k = 0; k < total; ++k)
        if (w[k] != 0)
            for (size_t i = 0; i < n; ++i)
                z[i] += w[k] * U[k][i];
    return z;
}

// Coordinate of one coefficient slot: the unit's two Burnside parts are slots 0 and 1 of HKind::Unit.
using Slot = std::pair<HSymbol, int>;

inline void add_coords(std::map<Slot, Int>& out, const HElem& c, Int scale = 1)
{
    if (c.unit().a != 0)
        out[{HSymbol{}, 0}] += scale * c.unit().a;
    if (c.unit().b != 0)
        out[{HSymbol{}, 1}] += scale * c.unit().b;
    for (auto& [s, k] : c.terms())
        out[{s, 0}] += scale * k;
}

// Gradings of the pieces of an element, keyed by total grading.
template <class Mono>
std::map<Grading, std::vector<std::pair<Mono, HElem>>> homogeneous_parts(const std::map<Mono, HElem>& terms, auto&& grading_of_mono)
{
    std::map<Grading, std::vector<std::pair<Mono, HElem>>> parts;
    for (auto& [m, c] : terms) {
        Grading base = grading_of_mono(m);
        if (!c.unit().is_zero())
            parts[base].push_back({m, HElem(c.unit())});
        for (auto& [s, k] : c.terms()) {
            RO2 g = symbol_grading(s);
            parts[base + Grading{g.a, g.b, 0}].push_back({m, HElem::symbol(s, k)});
        }
    }
    return parts;
}

// Generators of ℍ in grading g, empty when the group is zero or uncharted.
inline std::vector<HElem> coefficient_generators(RO2 g)
{
    try {
        HGroup grp = group_at(g);
        switch (grp.kind) {
        case HGroup::Zero: return {};
        case HGroup::BurnsideSlot: return {HElem(1), HElem::g()};
        default: return {HElem::symbol(grp.generator)};
        }
    }
    catch (const Error& e) {
        if (e.kind() != ErrorKind::OutOfScope)
            throw;
        return {};
    }
}

// Solves ζ^k·y = x piece by piece.  `candidates(g)` lists basis monomials of the quotient's coset for
// target grading g, `times(mono, coeff)` returns the normal form of ζ^k·coeff·mono as a term map.
template <class Mono>
std::optional<std::map<Mono, HElem>> solve_division(const std::map<Mono, HElem>& x, Grading zeta_shift, auto&& grading_of_mono,
                                                    auto&& candidates, auto&& times)
{
    std::map<Mono, HElem> y;
    for (auto& [g, piece] : homogeneous_parts(x, grading_of_mono)) {
        Grading want = g - zeta_shift;
        std::vector<std::pair<Mono, HElem>> unknowns;
        for (const Mono& b : candidates(want)) {
            Grading rest = want - grading_of_mono(b);
            if (rest.w != 0)
                continue;
            for (auto& h : coefficient_generators({rest.u, rest.s}))
                unknowns.push_back({b, h});
        }
        std::map<std::pair<Mono, Slot>, size_t> index;
        std::vector<std::map<std::pair<Mono, Slot>, Int>> images;
        auto slot_of = [&](const Mono& m, const Slot& s) {
            auto [it, fresh] = index.try_emplace({m, s}, index.size());
            return it->second;
        };
        for (auto& [b, h] : unknowns) {
            std::map<std::pair<Mono, Slot>, Int> img;
            for (auto& [m, c] : times(b, h)) {
                std::map<Slot, Int> cs;
                add_coords(cs, c);
                for (auto& [s, v] : cs) {
                    slot_of(m, s);
                    img[{m, s}] += v;
                }
            }
            images.push_back(std::move(img));
        }
        std::map<std::pair<Mono, Slot>, Int> tgt;
        for (auto& [m, c] : piece) {
            std::map<Slot, Int> cs;
            add_coords(cs, c);
            for (auto& [s, v] : cs) {
                slot_of(m, s);
                tgt[{m, s}] += v;
            }
        }
        size_t rows = index.size();
        std::vector<Int> target(rows, 0), mod(rows, 0);
        for (auto& [key, r] : index) {
            mod[r] = is_torsion(key.second.first) ? 2 : 0;
            if (auto it = tgt.find(key); it != tgt.end())
                target[r] = it->second;
        }
        std::vector<std::vector<Int>> cols;
        for (auto& img : images) {
            std::vector<Int> col(rows, 0);
            for (auto& [key, v] : img)
                col[index.at(key)] = v;
            cols.push_back(std::move(col));
        }
        auto z = solve_integer(cols, target, mod);
        if (!z)
            return std::nullopt;
        for (size_t k = 0; k < unknowns.size(); ++k)
            if ((*z)[k] != 0) {
                HElem& slot = y[unknowns[k].first];
                slot += HElem((*z)[k]) * unknowns[k].second;
            }
    }
    std::erase_if(y, [](auto& kv) { return kv.second.is_zero(); });
    return y;
}

}  // namespace eqq::detail
