#pragma once
#include "eqq/quadric.hpp"

#include <filesystem>
#include <map>
#include <tuple>

namespace eqq::cache {

inline constexpr int format_version = 1;

// $EQQ_CACHE_DIR, else $XDG_CACHE_HOME/eqq, else ~/.cache/eqq.
std::filesystem::path default_directory();

// Products of basis monomials of a quadric, one table per (p, coset, coset), persisted as JSON.
class ProductTables {
public:
    // An empty directory keeps tables in memory only.
    explicit ProductTables(std::filesystem::path dir = {});

    QElem product(Int p, const QMonomial& x, const QMonomial& y);
    QElem multiply(const QElem& x, const QElem& y);

    struct Stats {
        int loaded = 0, computed = 0, rebuilt = 0;
    };
    const Stats& stats() const { return stats_; }
    std::filesystem::path file_for(Int p, Int n1, Int n2) const;

private:
    using Table = std::map<std::pair<QMonomial, QMonomial>, QElem>;
    Table& table(Int p, Int n1, Int n2);

    std::filesystem::path dir_;
    std::map<std::tuple<Int, Int, Int>, Table> tables_;
    Stats stats_;
};

}  // namespace eqq::cache
