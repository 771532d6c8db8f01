#include "eqq/commands.hpp"

#include "eqq/cache.hpp"
#include "eqq/diagram.hpp"
#include "eqq/errors.hpp"
#include "eqq/expr.hpp"
#include "eqq/grassmann.hpp"
#include "eqq/identities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace eqq {

using nlohmann::json;

namespace {

struct Settings {
    std::string space;
    std::string format = "text";
    std::string config;
    bool no_cache = false;
    bool trace = false;
};

// key = value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path)
{
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r\""));
            s.erase(s.find_last_not_of(" \t\r\"") + 1);
            return s;
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::string config_path(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* c = std::getenv("EQQ_CONFIG"); c && *c)
        return c;
    if (const char* h = std::getenv("HOME"); h && *h)
        return std::string(h) + "/.config/eqq/config";
    return {};
}

// --- JSON rendering ---

json coeff_json(const HElem& h)
{
    json value = nullptr;
    if (h.terms().empty()) {
        if (h.unit().b == 0)
            value = h.unit().a;
        else
            value = {{"a", h.unit().a}, {"b", h.unit().b}};
    }
    return {{"symbol", render_sum({{h, "1"}})}, {"value", value}};
}

json grading_json(std::optional<Grading> g)
{
    if (!g)
        return nullptr;
    return {{"u", g->u}, {"s", g->s}, {"w", g->w}};
}

std::optional<Grading> coefficient_grading(const HElem& h)
{
    RO2 r;
    if (h.is_zero() || !homogeneous_grading(h, r))
        return std::nullopt;
    return Grading{r.a, r.b, 0};
}

std::optional<Grading> element_grading(const Value& v)
{
    try {
        if (auto* q = std::get_if<QElem>(&v))
            return q->is_zero() ? std::nullopt : std::optional(quad::grading(*q));
        if (auto* pe = std::get_if<ProjElem>(&v)) {
            std::optional<Grading> g;
            for (auto& [m, c] : pe->terms) {
                auto cg = coefficient_grading(c);
                if (!cg)
                    return std::nullopt;
                Grading t = grading_of(m) + *cg;
                if (g && *g != t)
                    return std::nullopt;
                g = t;
            }
            return g;
        }
        if (auto* h = std::get_if<HElem>(&v))
            return coefficient_grading(*h);
        if (auto* io = std::get_if<IotaElem>(&v)) {
            if (io->terms.size() != 1)
                return std::nullopt;
            Int k = io->terms.begin()->first;
            return Grading{-k, k, 0};
        }
    }
    catch (const Error& e) {
        if (e.kind() != ErrorKind::NotHomogeneous)
            throw;
    }
    return std::nullopt;
}

json mono_json(Int a, Int b, Int i, Int j, Int m)
{
    return {{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"m", m >= 0 ? json(m) : json(nullptr)}};
}

json value_json(const Value& v, const Space& sp)
{
    json terms = json::array();
    if (auto* q = std::get_if<QElem>(&v))
        for (auto& [m, c] : q->terms)
            terms.push_back({{"coeff", coeff_json(c)}, {"monomial", mono_json(m.a, m.b, m.i, m.j, m.m)}});
    else if (auto* pe = std::get_if<ProjElem>(&v))
        for (auto& [m, c] : pe->terms)
            terms.push_back({{"coeff", coeff_json(c)}, {"monomial", mono_json(m.a, m.b, m.i, m.j, -1)}});
    else if (auto* h = std::get_if<HElem>(&v)) {
        if (!h->is_zero())
            terms.push_back({{"coeff", coeff_json(*h)}, {"monomial", nullptr}});
    }
    else if (auto* ne = std::get_if<NoneqElem>(&v))
        for (auto& [key, c] : ne->terms)
            terms.push_back({{"coeff", coeff_json(HElem(c))},
                             {"monomial", {{"c", key.first}, {"m", key.second >= 0 ? json(key.second) : json(nullptr)}}}});
    else
        for (auto& [k, c] : std::get<IotaElem>(v).terms)
            terms.push_back({{"coeff", coeff_json(HElem(c))}, {"monomial", {{"iota", k}}}});
    return {{"space", to_string(sp)}, {"grading", grading_json(element_grading(v))}, {"text", render(v, sp)}, {"terms", terms}};
}

json check_json(const grass::Check& c) { return {{"ok", c.ok}, {"trace", c.trace}}; }

// --- the command runner ---

class Runner {
public:
    Runner(Settings s, std::istream& in, std::ostream& out) : set_(std::move(s)), in_(in), out_(out) {}

    Space space() const
    {
        if (set_.space.empty())
            fail(ErrorKind::Usage, "no space given (use --space or a config file)");
        return parse_space(set_.space);
    }

    bool json_out() const { return set_.format == "json"; }

    void text_or_svg_only(const std::string& cmd) const
    {
        if (set_.format == "svg")
            fail(ErrorKind::Usage, "--format svg applies only to diagram, not " + cmd);
    }

    std::string source(const std::string& arg)
    {
        if (arg != "-")
            return arg;
        std::string all((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
        while (!all.empty() && std::isspace(static_cast<unsigned char>(all.back())))
            all.pop_back();
        return all;
    }

    Value eval(const std::string& arg, const Space& sp) { return evaluate(source(arg), sp); }

    void emit_value(const Value& v, const Space& sp)
    {
        if (json_out())
            out_ << value_json(v, sp).dump(2) << "\n";
        else
            out_ << render(v, sp) << "\n";
    }

    void normalize(const std::string& e)
    {
        text_or_svg_only("normalize");
        Space sp = space();
        emit_value(eval(e, sp), sp);
    }

    void mul(const std::vector<std::string>& factors)
    {
        text_or_svg_only("mul");
        Space sp = space();
        std::vector<Value> vs;
        for (auto& f : factors)
            vs.push_back(eval(f, sp));
        Value acc = vs.front();
        if (is_quadric_like(sp)) {
            cache::ProductTables tables(set_.no_cache ? std::filesystem::path{} : cache::default_directory());
            QElem q = std::get<QElem>(acc);
            for (size_t k = 1; k < vs.size(); ++k)
                q = tables.multiply(q, std::get<QElem>(vs[k]));
            acc = q;
        }
        else
            for (size_t k = 1; k < vs.size(); ++k)
                acc = multiply(acc, vs[k]);
        emit_value(acc, sp);
    }

    void basis(std::optional<Int> n)
    {
        text_or_svg_only("basis");
        Space sp = space();
        if (!n)
            fail(ErrorKind::Usage, "basis needs --coset");
        std::vector<std::pair<std::string, Grading>> rows;
        json jrows = json::array();
        if (sp.kind == Space::Kind::Proj) {
            for (auto& m : proj::basis(sp.p, sp.q, *n)) {
                rows.push_back({to_string(m), grading_of(m)});
                jrows.push_back({{"monomial", mono_json(m.a, m.b, m.i, m.j, -1)}});
            }
        }
        else if (is_quadric_like(sp)) {
            Int p = quadric_p(sp);
            for (auto& m : quad::basis(p, *n)) {
                rows.push_back({to_string(m, sp.kind == Space::Kind::Grass ? grass::names : MonomialNames{}), grading_of(p, m)});
                jrows.push_back({{"monomial", mono_json(m.a, m.b, m.i, m.j, m.m)}});
            }
        }
        else
            fail(ErrorKind::SpaceMismatch, "basis is defined for proj, quadric and grass spaces");
        if (json_out()) {
            for (size_t k = 0; k < rows.size(); ++k) {
                jrows[k]["text"] = rows[k].first;
                jrows[k]["grading"] = grading_json(rows[k].second);
            }
            out_ << json{{"space", to_string(sp)}, {"coset", *n}, {"basis", jrows}}.dump(2) << "\n";
            return;
        }
        size_t width = 0;
        for (auto& r : rows)
            width = std::max(width, r.first.size());
        for (auto& [m, g] : rows)
            out_ << m << std::string(width - m.size() + 2, ' ') << to_string(g) << "\n";
    }

    void ro2_basis(Int p)
    {
        text_or_svg_only("ro2-basis");
        if (p < 1)
            fail(ErrorKind::Range, "ro2-basis needs p >= 1");
        auto entries = quad::ro2_basis(p);
        if (json_out()) {
            json rows = json::array();
            for (auto& e : entries)
                rows.push_back({{"a", e.a}, {"b", e.b}, {"text", to_string(e.mono)},
                                {"monomial", mono_json(e.mono.a, e.mono.b, e.mono.i, e.mono.j, e.mono.m)}});
            out_ << json{{"space", quad::descriptor(p)}, {"basis", rows}}.dump(2) << "\n";
            return;
        }
        for (auto& e : entries)
            out_ << "(" << e.a << "," << e.b << ")  " << to_string(e.mono) << "\n";
    }

    void grading(const std::string& e)
    {
        text_or_svg_only("grading");
        Space sp = space();
        Value v = eval(e, sp);
        if (is_zero(v))
            fail(ErrorKind::NotHomogeneous, "zero has no single grading");
        if (sp.kind == Space::Kind::Noneq)
            fail(ErrorKind::SpaceMismatch, "the underlying ring is integer graded; use an equivariant space");
        auto g = element_grading(v);
        if (!g)
            fail(ErrorKind::NotHomogeneous, "element is not homogeneous");
        if (json_out())
            out_ << json{{"space", to_string(sp)}, {"grading", grading_json(g)}, {"text", to_string(*g)}}.dump(2) << "\n";
        else
            out_ << to_string(*g) << "\n";
    }

    void restrict_underlying(const std::string& e)
    {
        text_or_svg_only("restrict");
        Space sp = space();
        Value v = eval(e, sp);
        if (auto* h = std::get_if<HElem>(&v)) {
            IotaElem r = rho(*h);
            emit_value(r, Space{Space::Kind::Iota, 0, 0});
            return;
        }
        if (!is_quadric_like(sp))
            fail(ErrorKind::SpaceMismatch, "restriction is available on quadric, grass and point spaces");
        NoneqElem r = rho_quadric(std::get<QElem>(v));
        emit_value(r, Space{Space::Kind::Noneq, r.p, 0});
    }

    void fixed_points(const std::string& e)
    {
        text_or_svg_only("fixed");
        Space sp = space();
        Value v = eval(e, sp);
        if (auto* h = std::get_if<HElem>(&v)) {
            Int f = fixed(*h);
            if (json_out())
                out_ << json{{"space", to_string(sp)}, {"fixed", f}}.dump(2) << "\n";
            else
                out_ << f << "\n";
            return;
        }
        if (!is_quadric_like(sp))
            fail(ErrorKind::SpaceMismatch, "fixed points are available on quadric, grass and point spaces");
        FixedElem f = fixed_quadric(std::get<QElem>(v));
        if (json_out())
            out_ << json{{"space", to_string(sp)},
                         {"fixed", {{"comp0", f.comp0}, {"comp1", f.comp1}, {"deg0", f.deg0}, {"deg1", f.deg1}}},
                         {"text", fixedring::to_string(f)}}
                        .dump(2)
                 << "\n";
        else
            out_ << fixedring::to_string(f) << "\n";
    }

    void divide(const std::string& e, const std::string& by, Int k)
    {
        text_or_svg_only("divide");
        Space sp = space();
        if (by != "z0" && by != "z1")
            fail(ErrorKind::Usage, "--by must be z0 or z1");
        Value v = eval(e, sp);
        if (auto* pe = std::get_if<ProjElem>(&v))
            v = proj::divide(*pe, by == "z0", k);
        else if (auto* q = std::get_if<QElem>(&v))
            v = quad::divide(*q, by == "z0" ? quad::Zeta::Z0 : quad::Zeta::Z1, k);
        else
            fail(ErrorKind::SpaceMismatch, "division by z0 or z1 needs a proj, quadric or grass space");
        emit_value(v, sp);
    }

    int check_identities()
    {
        text_or_svg_only("check-identities");
        std::vector<std::pair<std::string, grass::Check>> suites;
        auto quadric_suites = [&](Int p) {
            std::string tag = "quadric:" + std::to_string(p);
            suites.push_back({tag + " relations", ident::relations(p)});
            suites.push_back({tag + " restrictions", ident::restrictions(p)});
            suites.push_back({tag + " underlying products", ident::underlying_products(p)});
        };
        auto grass_suites = [&] {
            suites.push_back({"grass cxg derivation", grass::cxg_relation_check()});
            suites.push_back({"grass presentation", grass::presentation_check()});
        };
        if (set_.space.empty()) {
            for (Int p = 1; p <= 6; ++p)
                quadric_suites(p);
            grass_suites();
        }
        else {
            Space sp = space();
            if (sp.kind == Space::Kind::Quadric)
                quadric_suites(sp.p);
            else if (sp.kind == Space::Kind::Grass)
                grass_suites();
            else
                fail(ErrorKind::SpaceMismatch, "identity suites exist for quadric and grass spaces");
        }
        bool all = true;
        json j = json::object();
        for (auto& [name, c] : suites) {
            all = all && c.ok;
            if (json_out()) {
                j[name] = check_json(c);
                continue;
            }
            out_ << name << ": " << (c.ok ? "ok" : "FAILED") << " (" << c.trace.size() << " checks)\n";
            if (set_.trace || !c.ok)
                for (auto& line : c.trace)
                    if (set_.trace || line.find("FAILED") != std::string::npos)
                        out_ << "  " << line << "\n";
        }
        if (json_out())
            out_ << json{{"ok", all}, {"suites", j}}.dump(2) << "\n";
        return all ? 0 : 3;
    }

    void lines27()
    {
        text_or_svg_only("lines27");
        auto r = grass::euler_sym3();
        auto rep = grass::lines_report(r);
        NoneqElem rho_check = rho_quadric(r.value);
        FixedElem fixed_check = fixed_quadric(r.value);
        if (json_out()) {
            Space sp{Space::Kind::Grass, 3, 0};
            out_ << json{{"euler", value_json(r.value, sp)},
                         {"grading", to_string(r.grading)},
                         {"coefficient", {{"a", r.alpha.a}, {"b", r.alpha.b}, {"text", to_string(r.alpha)}}},
                         {"monomial", to_string(r.monomial, grass::names)},
                         {"rho_target", noneq::to_string(r.rho_target)},
                         {"fixed_target", fixedring::to_string(r.fixed_target)},
                         {"rho_of_result", noneq::to_string(rho_check)},
                         {"fixed_of_result", fixedring::to_string(fixed_check)},
                         {"lines", {{"I", rep.type_i}, {"II", rep.type_ii}, {"III", rep.type_iii}, {"IV", rep.type_iv}, {"total", rep.total}}},
                         {"c2_set", rep.c2_set},
                         {"trace", set_.trace ? json(r.trace) : json::array()}}
                        .dump(2)
                 << "\n";
            return;
        }
        if (set_.trace)
            for (auto& line : r.trace)
                out_ << "  " << line << "\n";
        out_ << "e(Sym^3 of the dual tautological bundle) = " << grass::to_string(r.value) << "\n";
        out_ << "grading: " << to_string(r.grading) << "\n";
        out_ << "underlying target: " << noneq::to_string(r.rho_target) << "   rho of result: " << noneq::to_string(rho_check) << "\n";
        out_ << "fixed target: " << fixedring::to_string(r.fixed_target) << "   fixed points of result: "
             << fixedring::to_string(fixed_check) << "\n";
        out_ << "lines by type: I " << rep.type_i << ", II " << rep.type_ii << ", III " << rep.type_iii << ", IV " << rep.type_iv
             << "; total " << rep.total << "\n";
        out_ << "as a C2-set: " << rep.c2_set << "\n";
    }

    void diagram(const std::string& kind, std::optional<Int> arg)
    {
        bool svg = set_.format == "svg";
        if (set_.format == "json")
            fail(ErrorKind::Usage, "diagram emits text or svg");
        if (kind == "ro2-basis") {
            if (!arg)
                fail(ErrorKind::Usage, "diagram ro2-basis needs P");
            if (*arg < 1)
                fail(ErrorKind::Range, "ro2-basis needs p >= 1");
            out_ << (svg ? diagram::ro2_basis_svg(*arg) : diagram::ro2_basis_text(*arg));
        }
        else if (kind == "hpoint-chart") {
            Int range = arg.value_or(8);
            out_ << (svg ? diagram::hpoint_chart_svg(range) : diagram::hpoint_chart_text(range));
        }
        else
            fail(ErrorKind::Usage, "unknown diagram '" + kind + "' (ro2-basis P | hpoint-chart)");
    }

private:
    Settings set_;
    std::istream& in_;
    std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact RO-graded equivariant cohomology of antisymmetric quadrics and their relatives", "eqq"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings set;
    app.add_option("--space", set.space, "proj:p|q, quadric:p, grass:2|3+1, noneq:p, point or iota");
    app.add_option("--format", set.format, "text, json or svg")->check(CLI::IsMember({"text", "json", "svg"}));
    app.add_option("--config", set.config, "key = value file with defaults for space and format");
    app.add_flag("--no-cache", set.no_cache, "do not read or write product tables");
    app.add_flag("--trace", set.trace, "print derivation traces");

    std::string expr1;
    std::vector<std::string> factors;
    std::optional<Int> coset, number;
    std::string by = "z0", kind;
    Int k = 1;

    auto* c_norm = app.add_subcommand("normalize", "normal form of an expression ('-' reads stdin)");
    c_norm->add_option("expr", expr1)->required();
    auto* c_mul = app.add_subcommand("mul", "product of expressions, through the product tables");
    c_mul->add_option("factors", factors)->required()->expected(2, -1);
    auto* c_basis = app.add_subcommand("basis", "basis of one coset");
    c_basis->add_option("--coset", coset, "Ω₁-coefficient n");
    auto* c_ro2 = app.add_subcommand("ro2-basis", "basis over the RO(C2)-graded part of quadric:P");
    c_ro2->add_option("P", number)->required();
    auto* c_grading = app.add_subcommand("grading", "grading of a homogeneous element");
    c_grading->add_option("expr", expr1)->required();
    auto* c_restrict = app.add_subcommand("restrict", "restriction to nonequivariant cohomology");
    c_restrict->add_option("expr", expr1)->required();
    auto* c_fixed = app.add_subcommand("fixed", "restriction to the fixed points");
    c_fixed->add_option("expr", expr1)->required();
    auto* c_divide = app.add_subcommand("divide", "divide by a power of z0 or z1");
    c_divide->add_option("expr", expr1)->required();
    c_divide->add_option("--by", by, "z0 or z1");
    c_divide->add_option("--k", k, "exponent")->check(CLI::NonNegativeNumber);
    auto* c_check = app.add_subcommand("check-identities", "verify the defining relations and derived identities");
    auto* c_lines = app.add_subcommand("lines27", "Euler class of Sym^3 of the dual tautological bundle and the line count");
    auto* c_diagram = app.add_subcommand("diagram", "lattice picture: ro2-basis P | hpoint-chart [RANGE]");
    c_diagram->add_option("kind", kind)->required();
    c_diagram->add_option("arg", number);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        std::string cfg = config_path(set.config);
        if (!set.config.empty() && !std::filesystem::exists(set.config))
            fail(ErrorKind::Usage, "config file '" + set.config + "' not found");
        if (!cfg.empty() && std::filesystem::exists(cfg)) {
            auto kv = read_config(cfg);
            if (app.count("--space") == 0 && kv.count("space"))
                set.space = kv["space"];
            if (app.count("--format") == 0 && kv.count("format")) {
                set.format = kv["format"];
                if (set.format != "text" && set.format != "json" && set.format != "svg")
                    fail(ErrorKind::Usage, "config format must be text, json or svg");
            }
        }
        Runner run(set, in, out);
        if (c_norm->parsed())
            run.normalize(expr1);
        else if (c_mul->parsed())
            run.mul(factors);
        else if (c_basis->parsed())
            run.basis(coset);
        else if (c_ro2->parsed())
            run.ro2_basis(*number);
        else if (c_grading->parsed())
            run.grading(expr1);
        else if (c_restrict->parsed())
            run.restrict_underlying(expr1);
        else if (c_fixed->parsed())
            run.fixed_points(expr1);
        else if (c_divide->parsed())
            run.divide(expr1, by, k);
        else if (c_check->parsed())
            return run.check_identities();
        else if (c_lines->parsed())
            run.lines27();
        else if (c_diagram->parsed())
            run.diagram(kind, number);
        return 0;
    }
    catch (const Error& e) {
        err << "error (" << e.kind_name() << "): " << e.what() << "\n";
        return exit_code(e.kind());
    }
    catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace eqq
