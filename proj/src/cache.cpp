#include "eqq/cache.hpp"

#include "eqq/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <unistd.h>

namespace eqq::cache {

using nlohmann::json;

namespace {

json mono_json(const QMonomial& m) { return json::array({m.a, m.b, m.i, m.j, m.m}); }

QMonomial mono_from(const json& j) { return {j.at(0), j.at(1), j.at(2), j.at(3), j.at(4)}; }

json coeff_json(const HElem& h)
{
    json syms = json::array();
    for (auto& [s, c] : h.terms())
        syms.push_back({static_cast<int>(s.kind), s.x, s.y, c});
    return {{"unit", {h.unit().a, h.unit().b}}, {"symbols", syms}};
}

HElem coeff_from(const json& j)
{
    HElem h(Burnside{j.at("unit").at(0), j.at("unit").at(1)});
    for (auto& s : j.at("symbols")) {
        int kind = s.at(0);
        if (kind < 0 || kind > static_cast<int>(HKind::TauNeg))
            throw std::runtime_error("bad symbol kind");
        h += HElem::symbol({static_cast<HKind>(kind), s.at(1), s.at(2)}, s.at(3));
    }
    return h;
}

json elem_json(const QElem& x)
{
    json out = json::array();
    for (auto& [m, c] : x.terms)
        out.push_back({{"mono", mono_json(m)}, {"coeff", coeff_json(c)}});
    return out;
}

QElem elem_from(Int p, const json& j)
{
    QElem x = quad::zero(p);
    for (auto& t : j)
        x.terms[mono_from(t.at("mono"))] = coeff_from(t.at("coeff"));
    return x;
}

}  // namespace

std::filesystem::path default_directory()
{
    if (const char* d = std::getenv("EQQ_CACHE_DIR"); d && *d)
        return d;
    if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d)
        return std::filesystem::path(d) / "eqq";
    if (const char* h = std::getenv("HOME"); h && *h)
        return std::filesystem::path(h) / ".cache" / "eqq";
    return {};
}

ProductTables::ProductTables(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ProductTables::file_for(Int p, Int n1, Int n2) const
{
    return dir_ / ("quadric" + std::to_string(p) + "_" + std::to_string(n1) + "_" + std::to_string(n2) + ".json");
}

ProductTables::Table& ProductTables::table(Int p, Int n1, Int n2)
{
    auto key = std::make_tuple(p, n1, n2);
    if (auto it = tables_.find(key); it != tables_.end())
        return it->second;

    auto compute = [&] {
        Table t;
        for (auto& x : quad::basis(p, n1))
            for (auto& y : quad::basis(p, n2))
                t[{x, y}] = quad::mul(quad::monomial(p, x), quad::monomial(p, y));
        return t;
    };

    Table t;
    bool have = false;
    std::filesystem::path file = dir_.empty() ? std::filesystem::path{} : file_for(p, n1, n2);
    if (!file.empty() && std::filesystem::exists(file)) {
        try {
            std::ifstream in(file);
            json j = json::parse(in);
            if (j.at("version") == format_version && j.at("p") == p && j.at("n1") == n1 && j.at("n2") == n2) {
                for (auto& e : j.at("entries"))
                    t[{mono_from(e.at("x")), mono_from(e.at("y"))}] = elem_from(p, e.at("value"));
                // spot-check one entry against a fresh computation
                if (!t.empty()) {
                    std::mt19937_64 rng{std::random_device{}()};
                    auto it = std::next(t.begin(), static_cast<long>(rng() % t.size()));
                    auto& [x, y] = it->first;
                    have = t.size() == quad::basis(p, n1).size() * quad::basis(p, n2).size() &&
                           quad::mul(quad::monomial(p, x), quad::monomial(p, y)) == it->second;
                }
            }
        }
        catch (const std::exception&) {
            have = false;
        }
        if (have)
            ++stats_.loaded;
        else
            ++stats_.rebuilt;
    }
    if (!have) {
        t = compute();
        ++stats_.computed;
        if (!file.empty()) {
            json entries = json::array();
            for (auto& [xy, v] : t)
                entries.push_back({{"x", mono_json(xy.first)}, {"y", mono_json(xy.second)}, {"value", elem_json(v)}});
            json j = {{"version", format_version}, {"space", quad::descriptor(p)}, {"p", p}, {"n1", n1}, {"n2", n2}, {"entries", entries}};
            std::error_code ec;
            std::filesystem::create_directories(dir_, ec);
            auto tmp = file;
            tmp += ".tmp" + std::to_string(::getpid());
            {
                std::ofstream out(tmp);
                out << j.dump(1) << "\n";
            }
            if (!ec)
                std::filesystem::rename(tmp, file, ec);
            if (ec)
                std::filesystem::remove(tmp, ec);  // an unwritable cache only costs recomputation
        }
    }
    return tables_[key] = std::move(t);
}

QElem ProductTables::product(Int p, const QMonomial& x, const QMonomial& y)
{
    if (!quad::is_basis_monomial(p, x) || !quad::is_basis_monomial(p, y))
        return quad::mul(quad::monomial(p, x), quad::monomial(p, y));
    Int n1 = coset_of(p, x), n2 = coset_of(p, y);
    if (n1 > n2)
        return product(p, y, x);
    auto& t = table(p, n1, n2);
    auto it = t.find({x, y});
    if (it == t.end())
        fail(ErrorKind::Internal, "product table lacks a basis pair");
    return it->second;
}

QElem ProductTables::multiply(const QElem& x, const QElem& y)
{
    if (x.p != y.p)
        fail(ErrorKind::SpaceMismatch, "factors live on different quadrics");
    QElem r = quad::zero(x.p);
    for (auto& [mx, cx] : x.terms)
        for (auto& [my, cy] : y.terms)
            r = quad::add(r, quad::scale(cx * cy, product(x.p, mx, my)));
    return r;
}

}  // namespace eqq::cache
