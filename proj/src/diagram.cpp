#include "eqq/diagram.hpp"

#include "eqq/errors.hpp"
#include "eqq/hpoint.hpp"
#include "eqq/quadric.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace eqq::diagram {

namespace {

struct Cell {
    int count = 0;
    std::vector<std::string> labels;
};

std::map<std::pair<Int, Int>, Cell> ro2_cells(Int p)
{
    std::map<std::pair<Int, Int>, Cell> cells;
    for (auto& e : quad::ro2_basis(p)) {
        Cell& c = cells[{e.a, e.b}];
        ++c.count;
        c.labels.push_back(to_string(e.mono));
    }
    return cells;
}

// Axis-aligned window holding the origin and every cell.
struct Window {
    Int lo_a = 0, hi_a = 0, lo_b = 0, hi_b = 0;
};

Window window_of(const std::map<std::pair<Int, Int>, Cell>& cells)
{
    Window w;
    for (auto& [pos, c] : cells) {
        w.lo_a = std::min(w.lo_a, pos.first);
        w.hi_a = std::max(w.hi_a, pos.first);
        w.lo_b = std::min(w.lo_b, pos.second);
        w.hi_b = std::max(w.hi_b, pos.second);
    }
    return w;
}

// Rows from top (largest b) down; '+' marks the axes crossing.
std::string grid_text(const Window& w, auto&& glyph)
{
    std::ostringstream out;
    for (Int b = w.hi_b; b >= w.lo_b; --b) {
        std::string row;
        for (Int a = w.lo_a; a <= w.hi_a; ++a) {
            char g = glyph(a, b);
            if (g == ' ')
                g = a == 0 && b == 0 ? '+' : a == 0 ? '|' : b == 0 ? '-' : '.';
            row += g;
            if (a < w.hi_a)
                row += b == 0 ? '-' : ' ';
        }
        while (!row.empty() && row.back() == ' ')
            row.pop_back();
        std::string tag = std::to_string(b);
        out << std::string(4 - std::min<size_t>(4, tag.size()), ' ') << tag << " " << row << "\n";
    }
    std::string axis = "     ";
    for (Int a = w.lo_a; a <= w.hi_a; ++a) {
        std::string t = std::to_string(a);
        axis += a % 2 == 0 ? t.substr(0, 1) + (a < w.hi_a ? " " : "") : (a < w.hi_a ? "  " : "");
        if (a % 2 == 0 && t.size() > 1)
            axis.back() = t[1];
    }
    out << axis << "\n";
    return out.str();
}

constexpr double unit = 24.0;

struct Svg {
    Window w;
    std::ostringstream body;
    double x(Int a) const { return (double(a - w.lo_a) + 1.5) * unit; }
    double y(Int b) const { return (double(w.hi_b - b) + 1.5) * unit; }
    std::string finish() const
    {
        double width = double(w.hi_a - w.lo_a + 3) * unit, height = double(w.hi_b - w.lo_b + 3) * unit;
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
            << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
        for (Int a = w.lo_a; a <= w.hi_a; ++a)
            if (a % 2 == 0)
                out << "  <line class=\"grid\" x1=\"" << x(a) << "\" y1=\"" << y(w.hi_b) << "\" x2=\"" << x(a) << "\" y2=\""
                    << y(w.lo_b) << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
        for (Int b = w.lo_b; b <= w.hi_b; ++b)
            if (b % 2 == 0)
                out << "  <line class=\"grid\" x1=\"" << x(w.lo_a) << "\" y1=\"" << y(b) << "\" x2=\"" << x(w.hi_a) << "\" y2=\""
                    << y(b) << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
        out << "  <line class=\"axis\" x1=\"" << x(w.lo_a) - unit << "\" y1=\"" << y(0) << "\" x2=\"" << x(w.hi_a) + unit
            << "\" y2=\"" << y(0) << "\" stroke=\"black\"/>\n";
        out << "  <line class=\"axis\" x1=\"" << x(0) << "\" y1=\"" << y(w.lo_b) + unit << "\" x2=\"" << x(0) << "\" y2=\""
            << y(w.hi_b) - unit << "\" stroke=\"black\"/>\n";
        out << body.str() << "</svg>\n";
        return out.str();
    }
};

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else if (c == '&')
            out += "&amp;";
        else
            out += c;
    }
    return out;
}

Window square(Int range) { return {-range, range, -range, range}; }

// nullopt-like: Zero for empty cells and for the uncharted part of the fourth quadrant.
HGroup::Kind chart_kind(Int a, Int b, bool& charted)
{
    charted = true;
    try {
        return group_at({a, b}).kind;
    }
    catch (const Error& e) {
        if (e.kind() != ErrorKind::OutOfScope)
            throw;
        charted = false;
        return HGroup::Zero;
    }
}

}  // namespace

std::string ro2_basis_text(Int p)
{
    auto cells = ro2_cells(p);
    Window w = window_of(cells);
    std::ostringstream out;
    out << "RO(C2)-graded basis of quadric:" << p << "  (* one element, @ two elements)\n";
    out << grid_text(w, [&](Int a, Int b) {
        auto it = cells.find({a, b});
        if (it == cells.end())
            return ' ';
        return it->second.count >= 2 ? '@' : '*';
    });
    for (auto& [pos, c] : cells) {
        out << "(" << pos.first << "," << pos.second << ")";
        for (auto& l : c.labels)
            out << "  " << l;
        out << "\n";
    }
    return out.str();
}

std::string ro2_basis_svg(Int p)
{
    auto cells = ro2_cells(p);
    Svg svg;
    svg.w = window_of(cells);
    for (auto& [pos, c] : cells) {
        double cx = svg.x(pos.first), cy = svg.y(pos.second);
        svg.body << "  <circle class=\"basis\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << unit * 0.25 << "\" fill=\"black\"/>\n";
        if (c.count >= 2)
            svg.body << "  <circle class=\"double\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << unit * 0.42
                     << "\" fill=\"none\" stroke=\"black\"/>\n";
        for (auto& l : c.labels)
            if (l.find("m[") != std::string::npos) {
                svg.body << "  <text x=\"" << cx + unit * 0.45 << "\" y=\"" << cy - unit * 0.3 << "\" font-size=\"" << unit * 0.45
                         << "\">" << xml_escape(l.substr(l.find("m["))) << "</text>\n";
                break;
            }
    }
    return svg.finish();
}

std::string hpoint_chart_text(Int range)
{
    if (range < 1)
        fail(ErrorKind::Range, "chart range must be positive");
    std::ostringstream out;
    out << "cohomology of a point  (# A(C2), * Z, o Z/2, blank: zero or outside the charted region)\n";
    out << grid_text(square(range), [&](Int a, Int b) {
        bool charted;
        switch (chart_kind(a, b, charted)) {
        case HGroup::BurnsideSlot: return '#';
        case HGroup::Z: return '*';
        case HGroup::Z2: return 'o';
        default: return ' ';
        }
    });
    return out.str();
}

std::string hpoint_chart_svg(Int range)
{
    if (range < 1)
        fail(ErrorKind::Range, "chart range must be positive");
    Svg svg;
    svg.w = square(range);
    const double r = unit * 0.2;
    for (Int a = -range; a <= range; ++a)
        for (Int b = -range; b <= range; ++b) {
            bool charted;
            auto kind = chart_kind(a, b, charted);
            double cx = svg.x(a), cy = svg.y(b);
            if (kind == HGroup::BurnsideSlot)
                svg.body << "  <rect class=\"burnside\" x=\"" << cx - unit * 0.3 << "\" y=\"" << cy - unit * 0.3 << "\" width=\""
                         << unit * 0.6 << "\" height=\"" << unit * 0.6 << "\" fill=\"black\"/>\n";
            else if (kind == HGroup::Z)
                svg.body << "  <circle class=\"z\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"black\"/>\n";
            else if (kind == HGroup::Z2)
                svg.body << "  <circle class=\"z2\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
                         << "\" fill=\"white\" stroke=\"black\"/>\n";
        }
    return svg.finish();
}

}  // namespace eqq::diagram
