#pragma once
#include "eqq/hpoint.hpp"
#include "eqq/projspace.hpp"
#include "eqq/quadric.hpp"
#include "eqq/restrict.hpp"

#include <string>
#include <variant>
#include <vector>

namespace eqq {

struct Space {
    enum class Kind { Proj, Quadric, Grass, Noneq, Point, Iota } kind = Kind::Quadric;
    Int p = 1, q = 0;
    friend bool operator==(const Space&, const Space&) = default;
};

// "proj:p|q", "quadric:p", "grass:2|3+1", "noneq:p", "point", "iota"
Space parse_space(const std::string& text);
std::string to_string(const Space& sp);
// Quadric dimension parameter behind a quadric-like space (grass → 3).
Int quadric_p(const Space& sp);
bool is_quadric_like(const Space& sp);

struct Node {
    enum class Kind { Num, Gen, Add, Sub, Neg, Mul, Pow } kind = Kind::Num;
    Int num = 0;          // literal value, or exponent for Pow
    std::string name;     // canonical generator name
    Int index = 0;        // m[s] index or tau(n) argument
    bool has_index = false;
    std::vector<Node> kids;
    size_t pos = 0;
};

// Grammar: expr := ['-'] term (('+'|'-') term)*; term := factor (['*'] factor)*;
// factor := atom ('^' ['-'] int)?; atom := int | generator | '(' expr ')'.
Node parse_expression(const std::string& text);

using Value = std::variant<ProjElem, QElem, HElem, NoneqElem, IotaElem>;

Value evaluate(const Node& ast, const Space& sp, const QuadricStrategy& how = {});
Value evaluate(const std::string& text, const Space& sp, const QuadricStrategy& how = {});

Value add(const Value& x, const Value& y);
Value multiply(const Value& x, const Value& y, const QuadricStrategy& how = {});
std::string render(const Value& v, const Space& sp);
bool is_zero(const Value& v);

// Generator names understood in a space, for error messages.
std::vector<std::string> generators_of(const Space& sp);

}  // namespace eqq
