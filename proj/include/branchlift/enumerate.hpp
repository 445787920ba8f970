#pragma once

#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "branchlift/abelian_group.hpp"
#include "branchlift/cover.hpp"
#include "branchlift/errors.hpp"
#include "branchlift/lifting.hpp"

namespace branchlift {

inline constexpr std::int64_t kDefaultMaxSearchSpace = 10'000'000;

/// Every admissible k-tuple over A (nonzero entries, zero sum, generating),
/// each exactly once, in lexicographic order.  The depth-first search
/// prunes a prefix unless its partial sum can still be cancelled by the
/// remaining entries; the generation check runs on full tuples only.
inline std::vector<std::vector<GroupElement>> enumerate_admissible(
    const GroupSpec& g, int k, std::int64_t max_search_space = kDefaultMaxSearchSpace) {
    if (k < 2) throw BoundError("admissible tuples need k >= 2");
    const std::int64_t n = g.order();
    std::int64_t space = 1;
    for (int i = 0; i < k; ++i) {
        if (space > max_search_space / n)
            throw BoundError("search space |A|^k exceeds the bound " +
                             std::to_string(max_search_space));
        space *= n;
    }

    const auto all = g.elements();

    // reachable[m][t]: t is a sum of exactly m nonzero elements
    std::vector<std::vector<bool>> reachable(static_cast<std::size_t>(k) + 1,
                                             std::vector<bool>(static_cast<std::size_t>(n), false));
    for (std::int64_t e = 1; e < n; ++e) reachable[1][static_cast<std::size_t>(e)] = true;
    for (int m = 1; m < k; ++m)
        for (std::int64_t t = 0; t < n; ++t) {
            if (!reachable[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)]) continue;
            for (std::int64_t e = 1; e < n; ++e) {
                std::int64_t s = g.index_of(g.add(all[static_cast<std::size_t>(t)],
                                                  all[static_cast<std::size_t>(e)]));
                reachable[static_cast<std::size_t>(m) + 1][static_cast<std::size_t>(s)] = true;
            }
        }

    std::vector<std::vector<GroupElement>> out;
    std::vector<GroupElement> tuple;
    auto dfs = [&](auto&& self, int depth, const GroupElement& sum) -> void {
        if (depth == k) {
            if (sum.is_zero() && g.generates(tuple)) out.push_back(tuple);
            return;
        }
        for (std::int64_t e = 1; e < n; ++e) {
            const auto& elem = all[static_cast<std::size_t>(e)];
            GroupElement next = g.add(sum, elem);
            int remaining = k - depth - 1;
            std::int64_t need = g.index_of(g.neg(next));
            if (remaining == 0) {
                if (need != 0) continue;
            } else if (!reachable[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(need)]) {
                continue;
            }
            tuple.push_back(elem);
            self(self, depth + 1, next);
            tuple.pop_back();
        }
    };
    dfs(dfs, 0, g.zero());
    return out;
}

/// One equivalence class of admissible tuples: the canonical
/// representative plus the per-class decisions.
struct CensusRow {
    GroupSpec group;
    int k = 0;
    std::vector<GroupElement> tuple;  // canonical representative
    std::int64_t orbit_size = 0;      // admissible tuples in this class
    bool all_lift = false;
    std::int64_t genus = 0;
    std::int64_t liftable_order = 0;
};

/// One row per equivalence class (canonical-form dedup), sorted by
/// canonical tuple.  Labeled mode quotients by Aut(A) only; unlabeled
/// mode also quotients by branch-point relabeling.
inline std::vector<CensusRow> classify(const GroupSpec& g, int k, bool unlabeled = false,
                                       std::int64_t max_aut_order = kDefaultMaxAutOrder,
                                       std::int64_t max_search_space = kDefaultMaxSearchSpace) {
    std::map<std::vector<GroupElement>, std::int64_t> orbit_count;
    for (auto& tup : enumerate_admissible(g, k, max_search_space)) {
        CoverSpec c(g, std::move(tup));
        orbit_count[canonical_form(c, unlabeled, max_aut_order)] += 1;
    }

    std::vector<CensusRow> rows;
    for (const auto& [canon, count] : orbit_count) {
        CoverSpec c(g, canon);
        CensusRow row{g, k, canon, count, false, 0, 0};
        row.all_lift = g.is_cyclic()
                           ? all_lift_theorem(c)
                           : all_lift_bruteforce(c, BruteForceMode::Transpositions, max_aut_order);
        row.genus = surface_invariants(c).genus;
        row.liftable_order = static_cast<std::int64_t>(liftable_subgroup(c, max_aut_order).order);
        rows.push_back(std::move(row));
    }
    return rows;
}

struct CensusCellTotals {
    GroupSpec group;
    int k = 0;
    std::int64_t classes = 0;
    std::int64_t all_lift_classes = 0;
};

struct CensusReport {
    std::vector<CensusRow> rows;
    std::vector<CensusCellTotals> totals;
    bool unlabeled = false;
};

/// Classification swept over cyclic groups Z/n, n in [n_lo, n_hi] and
/// k in [k_lo, k_hi], with per-(n,k) totals.  Deterministic output order.
inline CensusReport census(std::int64_t n_lo, std::int64_t n_hi, int k_lo, int k_hi,
                           bool unlabeled = false,
                           std::int64_t max_aut_order = kDefaultMaxAutOrder,
                           std::int64_t max_search_space = kDefaultMaxSearchSpace) {
    if (n_lo < 2 || n_lo > n_hi || k_lo < 2 || k_lo > k_hi)
        throw BoundError("census ranges need 2 <= n_lo <= n_hi and 2 <= k_lo <= k_hi");
    CensusReport report;
    report.unlabeled = unlabeled;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        GroupSpec g({n});
        for (int k = k_lo; k <= k_hi; ++k) {
            auto rows = classify(g, k, unlabeled, max_aut_order, max_search_space);
            CensusCellTotals totals{g, k, static_cast<std::int64_t>(rows.size()), 0};
            for (const auto& row : rows)
                if (row.all_lift) ++totals.all_lift_classes;
            report.totals.push_back(std::move(totals));
            for (auto& row : rows) report.rows.push_back(std::move(row));
        }
    }
    return report;
}

inline std::string tuple_string(const GroupSpec& g, const std::vector<GroupElement>& tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        if (g.is_cyclic()) {
            out += std::to_string(tuple[i].coeffs[0]);
        } else {
            out += "(";
            for (std::size_t j = 0; j < tuple[i].coeffs.size(); ++j) {
                if (j) out += ",";
                out += std::to_string(tuple[i].coeffs[j]);
            }
            out += ")";
        }
    }
    return out + ")";
}

inline std::string group_string(const GroupSpec& g) {
    std::string out;
    for (std::size_t j = 0; j < g.invariant_factors().size(); ++j) {
        if (j) out += "+";
        out += "Z/" + std::to_string(g.invariant_factors()[j]);
    }
    return out;
}

/// Fixed-width terminal table: one line per class, then per-cell totals.
inline std::string render_census_table(const CensusReport& report) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "group" << std::right << std::setw(4) << "k"
       << std::setw(8) << "orbit" << std::setw(10) << "all_lift" << std::setw(7) << "genus"
       << std::setw(10) << "subgroup" << std::setw(6) << "smod"
       << "  tuple\n";
    for (const auto& row : report.rows) {
        std::string smod = "-";
        if (row.group.is_cyclic())
            smod = smod_iso(CoverSpec(row.group, row.tuple)) ? "yes" : "no";
        os << std::left << std::setw(10) << group_string(row.group) << std::right << std::setw(4)
           << row.k << std::setw(8) << row.orbit_size << std::setw(10)
           << (row.all_lift ? "yes" : "no") << std::setw(7) << row.genus << std::setw(10)
           << row.liftable_order << std::setw(6) << smod << "  "
           << tuple_string(row.group, row.tuple) << "\n";
    }
    os << "\n" << std::left << std::setw(10) << "group" << std::right << std::setw(4) << "k"
       << std::setw(9) << "classes" << std::setw(10) << "all_lift" << "\n";
    for (const auto& t : report.totals) {
        os << std::left << std::setw(10) << group_string(t.group) << std::right << std::setw(4)
           << t.k << std::setw(9) << t.classes << std::setw(10) << t.all_lift_classes << "\n";
    }
    return os.str();
}

}  // namespace branchlift
