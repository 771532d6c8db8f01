#include "eqq/expr.hpp"

#include "eqq/errors.hpp"
#include "eqq/grassmann.hpp"

#include <array>
#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace eqq {

Space parse_space(const std::string& text)
{
    auto num = [&](const std::string& s) -> Int {
        if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            fail(ErrorKind::Usage, "bad space descriptor '" + text + "'");
        return std::stoll(s);
    };
    if (text == "grass:2|3+1" || text == "grass")
        return {Space::Kind::Grass, 3, 0};
    if (text == "point")
        return {Space::Kind::Point, 0, 0};
    if (text == "iota")
        return {Space::Kind::Iota, 0, 0};
    auto colon = text.find(':');
    if (colon == std::string::npos)
        fail(ErrorKind::Usage, "bad space descriptor '" + text + "'");
    std::string head = text.substr(0, colon), rest = text.substr(colon + 1);
    if (head == "quadric" || head == "noneq") {
        Int p = num(rest);
        if (p < 1)
            fail(ErrorKind::Usage, "quadric needs p >= 1");
        return {head == "quadric" ? Space::Kind::Quadric : Space::Kind::Noneq, p, 0};
    }
    if (head == "proj") {
        auto bar = rest.find('|');
        if (bar == std::string::npos)
            fail(ErrorKind::Usage, "bad space descriptor '" + text + "'");
        Int p = num(rest.substr(0, bar)), q = num(rest.substr(bar + 1));
        if (p + q < 1)
            fail(ErrorKind::Usage, "projective space needs p + q >= 1");
        return {Space::Kind::Proj, p, q};
    }
    fail(ErrorKind::Usage, "bad space descriptor '" + text + "'");
}

std::string to_string(const Space& sp)
{
    switch (sp.kind) {
    case Space::Kind::Proj: return "proj:" + std::to_string(sp.p) + "|" + std::to_string(sp.q);
    case Space::Kind::Quadric: return "quadric:" + std::to_string(sp.p);
    case Space::Kind::Grass: return "grass:2|3+1";
    case Space::Kind::Noneq: return "noneq:" + std::to_string(sp.p);
    case Space::Kind::Point: return "point";
    case Space::Kind::Iota: return "iota";
    }
    return "?";
}

bool is_quadric_like(const Space& sp) { return sp.kind == Space::Kind::Quadric || sp.kind == Space::Kind::Grass; }

Int quadric_p(const Space& sp)
{
    if (!is_quadric_like(sp))
        fail(ErrorKind::SpaceMismatch, to_string(sp) + " is not a quadric");
    return sp.kind == Space::Kind::Grass ? grass::p : sp.p;
}

std::vector<std::string> generators_of(const Space& sp)
{
    const std::vector<std::string> coeffs{"e", "xi", "kappa", "g", "tau(n)"};
    std::vector<std::string> out;
    switch (sp.kind) {
    case Space::Kind::Proj: out = {"z0", "z1", "cw", "cxw"}; break;
    case Space::Kind::Quadric: out = {"z0", "z1", "cw", "cxw", "m[s]"}; break;
    case Space::Kind::Grass: out = {"z0", "z1", "cl", "cxl", "cg", "cxg", "m[s]"}; break;
    case Space::Kind::Noneq: return {"c", "m0", "m1"};
    case Space::Kind::Iota: return {"iota"};
    case Space::Kind::Point: return coeffs;
    }
    out.insert(out.end(), coeffs.begin(), coeffs.end());
    return out;
}

namespace {

struct Tok {
    enum T { Num, Ident, Plus, Minus, Star, Caret, LP, RP, End } t = End;
    Int num = 0;
    std::string name;
    Int index = 0;
    bool has_index = false;
    size_t pos = 0;
};

const std::array<std::pair<const char*, const char*>, 16> aliases{{
    {"ĉ_χω", "cxw"}, {"ĉ_χλ", "cxl"}, {"ĉ_χγ", "cxg"}, {"ĉ_ω", "cw"}, {"ĉ_λ", "cl"}, {"ĉ_γ", "cg"},
    {"ĉ_χ", "cxw"},  {"ĉ", "cw"},     {"ζ₀", "z0"},    {"ζ₁", "z1"},  {"κ", "kappa"}, {"ξ", "xi"},
    {"τ", "tau"},    {"ι", "iota"},   {"m₀", "m0"},    {"m₁", "m1"},
}};

[[noreturn]] void syntax(size_t pos, const std::string& what)
{
    fail(ErrorKind::Syntax, "syntax error at position " + std::to_string(pos) + ": " + what);
}

std::vector<Tok> tokenize(const std::string& s)
{
    std::vector<Tok> out;
    size_t i = 0;
    auto read_int = [&](size_t& k, bool allow_sign) -> Int {
        int sign = 1;
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k])))
            ++k;
        if (allow_sign && k < s.size() && (s[k] == '-' || s[k] == '+')) {
            sign = s[k] == '-' ? -1 : 1;
            ++k;
        }
        else if (allow_sign && s.compare(k, 3, "−") == 0) {
            sign = -1;
            k += 3;
        }
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k])))
            ++k;
        if (k >= s.size() || !std::isdigit(static_cast<unsigned char>(s[k])))
            syntax(k, "expected an integer");
        Int v = 0;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
            v = v * 10 + (s[k++] - '0');
            if (v > (Int(1) << 40))
                syntax(k, "integer literal too large");
        }
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k])))
            ++k;
        return sign * v;
    };
    while (i < s.size()) {
        unsigned char ch = static_cast<unsigned char>(s[i]);
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        Tok t;
        t.pos = i;
        if (std::isdigit(ch)) {
            t.t = Tok::Num;
            size_t k = i;
            t.num = read_int(k, false);
            // read_int swallows trailing spaces; keep position semantics simple
            i = k;
            out.push_back(t);
            continue;
        }
        switch (ch) {
        case '+': t.t = Tok::Plus; break;
        case '-': t.t = Tok::Minus; break;
        case '*': t.t = Tok::Star; break;
        case '^': t.t = Tok::Caret; break;
        case '(': t.t = Tok::LP; break;
        case ')': t.t = Tok::RP; break;
        default: t.t = Tok::End;
        }
        if (t.t != Tok::End) {
            ++i;
            out.push_back(t);
            continue;
        }
        if (s.compare(i, 3, "−") == 0) {  // U+2212
            t.t = Tok::Minus;
            i += 3;
            out.push_back(t);
            continue;
        }
        if (s.compare(i, 2, "·") == 0) {
            t.t = Tok::Star;
            i += 2;
            out.push_back(t);
            continue;
        }
        std::string name;
        for (auto& [from, to] : aliases) {
            size_t len = std::char_traits<char>::length(from);
            if (s.compare(i, len, from) == 0) {
                name = to;
                i += len;
                break;
            }
        }
        if (name.empty()) {
            if (!(std::isalpha(ch) || ch == '_'))
                syntax(i, std::string("unexpected character '") + s[i] + "'");
            size_t k = i;
            while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_'))
                ++k;
            name = s.substr(i, k - i);
            i = k;
        }
        t.t = Tok::Ident;
        t.name = name;
        if (name == "m") {
            if (i >= s.size() || s[i] != '[')
                syntax(i, "expected '[' after m");
            ++i;
            t.index = read_int(i, false);
            if (i >= s.size() || s[i] != ']')
                syntax(i, "expected ']'");
            ++i;
            t.has_index = true;
        }
        else if (name == "tau") {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
                ++i;
            if (i >= s.size() || s[i] != '(')
                syntax(i, "expected '(' after tau");
            ++i;
            // tau(n) is τ(ι^n); also accept tau(iota^n)
            size_t save = i;
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
                ++i;
            if (s.compare(i, 4, "iota") == 0 || s.compare(i, 2, "ι") == 0) {
                i += s.compare(i, 4, "iota") == 0 ? 4 : 2;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    t.index = read_int(i, true);
                }
                else
                    t.index = 1;
            }
            else {
                i = save;
                t.index = read_int(i, true);
            }
            if (i >= s.size() || s[i] != ')')
                syntax(i, "expected ')'");
            ++i;
            t.has_index = true;
        }
        out.push_back(t);
    }
    Tok end;
    end.t = Tok::End;
    end.pos = s.size();
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

    Node parse()
    {
        Node n = expr();
        if (peek().t != Tok::End)
            syntax(peek().pos, "unexpected trailing input");
        return n;
    }

private:
    const Tok& peek() const { return toks_[k_]; }
    const Tok& take() { return toks_[k_++]; }

    Node expr()
    {
        Node left;
        if (peek().t == Tok::Minus) {
            size_t pos = take().pos;
            Node inner = term();
            left.kind = Node::Kind::Neg;
            left.pos = pos;
            left.kids.push_back(std::move(inner));
        }
        else
            left = term();
        while (peek().t == Tok::Plus || peek().t == Tok::Minus) {
            const Tok& op = take();
            Node right = term();
            Node n;
            n.kind = op.t == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub;
            n.pos = op.pos;
            n.kids.push_back(std::move(left));
            n.kids.push_back(std::move(right));
            left = std::move(n);
        }
        return left;
    }

    bool starts_atom() const
    {
        auto t = peek().t;
        return t == Tok::Num || t == Tok::Ident || t == Tok::LP;
    }

    Node term()
    {
        Node first = factor();
        if (!(peek().t == Tok::Star || starts_atom()))
            return first;
        Node n;
        n.kind = Node::Kind::Mul;
        n.pos = first.pos;
        n.kids.push_back(std::move(first));
        while (peek().t == Tok::Star || starts_atom()) {
            if (peek().t == Tok::Star)
                take();
            n.kids.push_back(factor());
        }
        return n;
    }

    Node factor()
    {
        Node a = atom();
        if (peek().t != Tok::Caret)
            return a;
        size_t pos = take().pos;
        int sign = 1;
        if (peek().t == Tok::Minus) {
            take();
            sign = -1;
        }
        if (peek().t != Tok::Num)
            syntax(peek().pos, "expected an integer exponent");
        Node n;
        n.kind = Node::Kind::Pow;
        n.pos = pos;
        n.num = sign * take().num;
        n.kids.push_back(std::move(a));
        return n;
    }

    Node atom()
    {
        const Tok& t = peek();
        Node n;
        n.pos = t.pos;
        switch (t.t) {
        case Tok::Num:
            n.kind = Node::Kind::Num;
            n.num = take().num;
            return n;
        case Tok::Ident:
            n.kind = Node::Kind::Gen;
            n.name = t.name;
            n.index = t.index;
            n.has_index = t.has_index;
            take();
            return n;
        case Tok::LP: {
            take();
            Node inner = expr();
            if (peek().t != Tok::RP)
                syntax(peek().pos, "expected ')'");
            take();
            return inner;
        }
        default: syntax(t.pos, "expected a number, generator or '('");
        }
    }

    std::vector<Tok> toks_;
    size_t k_ = 0;
};

// --- evaluation ---

struct Ctx {
    const Space& sp;
    const QuadricStrategy& how;
};

bool is_integer(const HElem& h) { return h.terms().empty() && h.unit().b == 0; }

Value embed(const Ctx& cx, const HElem& h)
{
    switch (cx.sp.kind) {
    case Space::Kind::Proj: return proj::scalar({cx.sp.p, cx.sp.q}, h);
    case Space::Kind::Quadric:
    case Space::Kind::Grass: return quad::scalar(quadric_p(cx.sp), h);
    case Space::Kind::Point: return h;
    case Space::Kind::Noneq:
    case Space::Kind::Iota:
        if (!is_integer(h))
            fail(ErrorKind::UnknownGenerator, "coefficients of " + to_string(cx.sp) + " are integers");
        if (cx.sp.kind == Space::Kind::Noneq)
            return noneq::constant(cx.sp.p, h.unit().a);
        return IotaElem::mono(0, h.unit().a);
    }
    fail(ErrorKind::Internal, "unknown space");
}

[[noreturn]] void unknown(const Ctx& cx, const Node& n)
{
    std::string list;
    for (auto& g : generators_of(cx.sp))
        list += (list.empty() ? "" : ", ") + g;
    fail(ErrorKind::UnknownGenerator,
         "unknown generator '" + n.name + "' at position " + std::to_string(n.pos) + " in " + to_string(cx.sp) + " (generators: " + list + ")");
}

std::optional<HElem> coefficient_generator(const Node& n)
{
    if (n.name == "e")
        return HElem::e(1);
    if (n.name == "xi")
        return HElem::xi(1);
    if (n.name == "kappa")
        return HElem::kappa();
    if (n.name == "g")
        return HElem::g();
    if (n.name == "tau")
        return tau(IotaElem::mono(n.index));
    return std::nullopt;
}

Value generator(const Ctx& cx, const Node& n)
{
    const Space& sp = cx.sp;
    if (sp.kind == Space::Kind::Noneq) {
        if (n.name == "c")
            return noneq::c_power(sp.p, 1);
        if (n.name == "m0" || n.name == "m1")
            return noneq::m(sp.p, n.name == "m0" ? 0 : 1);
        unknown(cx, n);
    }
    if (sp.kind == Space::Kind::Iota) {
        if (n.name == "iota")
            return IotaElem::mono(1);
        unknown(cx, n);
    }
    if (auto h = coefficient_generator(n))
        return embed(cx, *h);
    if (sp.kind == Space::Kind::Point)
        unknown(cx, n);

    std::string name = n.name;
    bool grass_space = sp.kind == Space::Kind::Grass;
    if (grass_space) {
        if (name == "cl")
            name = "cw";
        else if (name == "cxl")
            name = "cxw";
        else if (name == "cw" || name == "cxw")
            unknown(cx, n);
    }
    ProjMonomial pm;
    if (name == "z0")
        pm.a = 1;
    else if (name == "z1")
        pm.b = 1;
    else if (name == "cw")
        pm.i = 1;
    else if (name == "cxw")
        pm.j = 1;
    else if (sp.kind == Space::Kind::Proj)
        unknown(cx, n);
    else if (name == "m" && n.has_index) {
        Int p = quadric_p(sp);
        if (n.index < 0 || n.index > p)
            fail(ErrorKind::Range, "m[" + std::to_string(n.index) + "] needs an index in 0.." + std::to_string(p));
        return quad::m_class(p, n.index);
    }
    else if (grass_space && name == "cg")
        return grass::tautological_euler().first;
    else if (grass_space && name == "cxg")
        return grass::tautological_euler().second;
    else
        unknown(cx, n);

    if (sp.kind == Space::Kind::Proj)
        return proj::monomial({sp.p, sp.q}, pm);
    return quad::monomial(quadric_p(sp), {pm.a, pm.b, pm.i, pm.j, -1});
}

Value power(const Value& x, Int k, const Ctx& cx)
{
    if (k < 0)
        fail(ErrorKind::Malformed, "negative exponents are allowed only on z0, z1, iota, and e next to kappa");
    Value r = embed(cx, HElem(1));
    for (Int t = 0; t < k; ++t)
        r = multiply(r, x, cx.how);
    return r;
}

Value eval(const Node& n, const Ctx& cx);

Value eval_product(const std::vector<const Node*>& factors, const Ctx& cx)
{
    Int div0 = 0, div1 = 0, neg_e = 0;
    std::vector<const Node*> rest;
    for (const Node* f : factors) {
        if (f->kind == Node::Kind::Pow && f->num < 0 && f->kids[0].kind == Node::Kind::Gen) {
            const std::string& g = f->kids[0].name;
            bool zetas = cx.sp.kind == Space::Kind::Proj || is_quadric_like(cx.sp);
            if (zetas && g == "z0") {
                div0 += -f->num;
                continue;
            }
            if (zetas && g == "z1") {
                div1 += -f->num;
                continue;
            }
            if (g == "e" && cx.sp.kind != Space::Kind::Noneq && cx.sp.kind != Space::Kind::Iota) {
                neg_e += -f->num;
                continue;
            }
        }
        rest.push_back(f);
    }
    Value acc = embed(cx, HElem(1));
    bool used_kappa = neg_e == 0;
    for (const Node* f : rest) {
        if (!used_kappa && f->kind == Node::Kind::Gen && f->name == "kappa") {
            acc = multiply(acc, embed(cx, HElem::neg_kappa(neg_e)), cx.how);
            used_kappa = true;
            continue;
        }
        acc = multiply(acc, eval(*f, cx), cx.how);
    }
    if (!used_kappa)
        fail(ErrorKind::Malformed, "e^-m must be followed by kappa in the same product");
    if (div0 > 0 || div1 > 0) {
        if (auto* pe = std::get_if<ProjElem>(&acc)) {
            ProjElem r = proj::divide(*pe, true, div0);
            acc = proj::divide(r, false, div1);
        }
        else if (auto* qe = std::get_if<QElem>(&acc)) {
            QElem r = quad::divide(*qe, quad::Zeta::Z0, div0);
            acc = quad::divide(r, quad::Zeta::Z1, div1);
        }
    }
    return acc;
}

Value eval(const Node& n, const Ctx& cx)
{
    switch (n.kind) {
    case Node::Kind::Num: return embed(cx, HElem(n.num));
    case Node::Kind::Gen: return generator(cx, n);
    case Node::Kind::Add: return add(eval(n.kids[0], cx), eval(n.kids[1], cx));
    case Node::Kind::Sub: return add(eval(n.kids[0], cx), multiply(embed(cx, HElem(-1)), eval(n.kids[1], cx), cx.how));
    case Node::Kind::Neg: return multiply(embed(cx, HElem(-1)), eval(n.kids[0], cx), cx.how);
    case Node::Kind::Mul: {
        std::vector<const Node*> fs;
        for (auto& k : n.kids)
            fs.push_back(&k);
        return eval_product(fs, cx);
    }
    case Node::Kind::Pow: {
        if (n.num < 0) {
            if (cx.sp.kind == Space::Kind::Iota && n.kids[0].kind == Node::Kind::Gen && n.kids[0].name == "iota")
                return IotaElem::mono(n.num);
            return eval_product({&n}, cx);
        }
        return power(eval(n.kids[0], cx), n.num, cx);
    }
    }
    fail(ErrorKind::Internal, "bad expression node");
}

}  // namespace

Node parse_expression(const std::string& text) { return Parser(tokenize(text)).parse(); }

Value evaluate(const Node& ast, const Space& sp, const QuadricStrategy& how) { return eval(ast, Ctx{sp, how}); }

Value evaluate(const std::string& text, const Space& sp, const QuadricStrategy& how)
{
    return evaluate(parse_expression(text), sp, how);
}

Value add(const Value& x, const Value& y)
{
    if (x.index() != y.index())
        fail(ErrorKind::SpaceMismatch, "operands live in different rings");
    return std::visit(
        [&](auto& a) -> Value {
            using T = std::decay_t<decltype(a)>;
            const T& b = std::get<T>(y);
            if constexpr (std::is_same_v<T, ProjElem>)
                return proj::add(a, b);
            else if constexpr (std::is_same_v<T, QElem>)
                return quad::add(a, b);
            else if constexpr (std::is_same_v<T, HElem>)
                return a + b;
            else if constexpr (std::is_same_v<T, NoneqElem>)
                return noneq::add(a, b);
            else
                return a + b;
        },
        x);
}

Value multiply(const Value& x, const Value& y, const QuadricStrategy& how)
{
    if (x.index() != y.index())
        fail(ErrorKind::SpaceMismatch, "operands live in different rings");
    return std::visit(
        [&](auto& a) -> Value {
            using T = std::decay_t<decltype(a)>;
            const T& b = std::get<T>(y);
            if constexpr (std::is_same_v<T, ProjElem>)
                return proj::mul(a, b);
            else if constexpr (std::is_same_v<T, QElem>)
                return quad::mul(a, b, how);
            else if constexpr (std::is_same_v<T, HElem>)
                return a * b;
            else if constexpr (std::is_same_v<T, NoneqElem>)
                return noneq::mul(a, b);
            else
                return a * b;
        },
        x);
}

bool is_zero(const Value& v)
{
    return std::visit([](auto& a) { return a.is_zero(); }, v);
}

std::string render(const Value& v, const Space& sp)
{
    if (auto* q = std::get_if<QElem>(&v))
        return sp.kind == Space::Kind::Grass ? grass::to_string(*q) : quad::to_string(*q);
    if (auto* pe = std::get_if<ProjElem>(&v))
        return proj::to_string(*pe);
    if (auto* h = std::get_if<HElem>(&v))
        return to_string(*h);
    if (auto* ne = std::get_if<NoneqElem>(&v))
        return noneq::to_string(*ne);
    return to_string(std::get<IotaElem>(v));
}

}  // namespace eqq
