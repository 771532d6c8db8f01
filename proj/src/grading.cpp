#include "eqq/grading.hpp"

#include "eqq/errors.hpp"

#include <cctype>
#include <vector>

namespace eqq {

Grading make_grading(Int u, Int s, Int o0, Int o1) { return {u - 2 * o0, s + 2 * o0, o1 - o0}; }

Int rank(Grading g) { return g.u + g.s; }

std::pair<Int, Int> fixed_dims(Grading g) { return {g.u, g.u - 2 * g.w}; }

Grading nu(Int p, Int s)
{
    if (p < 1 || s < 0 || s > p)
        fail(ErrorKind::Range, "nu: need 0 <= s <= p, p >= 1");
    return {2 * s, 2 * (p - s - 1), 2 * s - p};
}

Int s_index(Int p, Int n)
{
    if (n >= p)
        return p;
    if (n <= -p)
        return 0;
    Int t = p + n;  // positive here
    return t / 2;
}

Coset coset(Grading g) { return {g.w, g.u, g.s}; }

Grading grading_from_dims(Int rk, Int fixed0, Int fixed1)
{
    if ((fixed0 - fixed1) % 2 != 0)
        fail(ErrorKind::Parity, "fixed dimensions differ by an odd number");
    Grading g{fixed0, rk - fixed0, (fixed0 - fixed1) / 2};
    return g;
}

namespace {

void append_term(std::string& out, Int c, const char* unit)
{
    if (c == 0)
        return;
    bool unitless = unit[0] == '\0';
    if (out.empty()) {
        if (c < 0)
            out += "-";
    }
    else
        out += c < 0 ? " - " : " + ";
    Int a = c < 0 ? -c : c;
    if (a != 1 || unitless)
        out += std::to_string(a);
    out += unit;
}

}  // namespace

std::string to_string(Grading g)
{
    std::string out;
    append_term(out, g.u, "");
    append_term(out, g.s, "σ");
    append_term(out, g.w, "Ω₁");
    return out.empty() ? "0" : out;
}

Grading parse_grading(const std::string& text)
{
    // Tokens: signed integer coefficients optionally followed by σ/s or Ω₁/W/O1 (Ω₀/O0 also accepted).
    Grading g;
    size_t i = 0;
    int sign = 1;
    bool expect_term = true;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto starts = [&](const char* lit) { return text.compare(i, std::char_traits<char>::length(lit), lit) == 0; };
    while (true) {
        skip();
        if (i >= text.size())
            break;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-')
                sign = -sign;
            ++i;
            expect_term = true;
            continue;
        }
        if (!expect_term)
            fail(ErrorKind::Syntax, "grading: expected sign at position " + std::to_string(i));
        Int coeff = 1;
        bool had_digits = false;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                coeff = coeff * 10 + (text[i++] - '0');
            had_digits = true;
        }
        skip();
        Grading unit = gr::one;
        if (starts("σ")) {
            unit = gr::sigma;
            i += std::char_traits<char>::length("σ");
        }
        else if (starts("Ω₁")) {
            unit = gr::omega1;
            i += std::char_traits<char>::length("Ω₁");
        }
        else if (starts("Ω₀")) {
            unit = gr::omega0;
            i += std::char_traits<char>::length("Ω₀");
        }
        else if (starts("O1") || starts("W")) {
            unit = gr::omega1;
            i += starts("W") ? 1 : 2;
        }
        else if (starts("O0")) {
            unit = gr::omega0;
            i += 2;
        }
        else if (starts("s")) {
            unit = gr::sigma;
            i += 1;
        }
        else if (!had_digits)
            fail(ErrorKind::Syntax, "grading: unexpected character at position " + std::to_string(i));
        g = g + (sign * coeff) * unit;
        sign = 1;
        expect_term = false;
    }
    if (expect_term)
        fail(ErrorKind::Syntax, "grading: dangling sign or empty input");
    return g;
}

}  // namespace eqq
