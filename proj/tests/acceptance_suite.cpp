// Acceptance suite: one line per criterion, [PASS]/[FAIL] with counts.
// Exit status is the number of failed criteria.

#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "branchlift/branchlift.hpp"

using namespace branchlift;

namespace {

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

bool witness_certifies(const CoverSpec& c, const Automorphism& psi, const Permutation& sigma) {
    for (int i = 0; i < c.k(); ++i)
        if (c.group().apply(psi, c.tuple()[i]) != c.tuple()[sigma(i)]) return false;
    return true;
}

struct Outcome {
    bool pass = false;
    std::string stats;
};

// 1. theorem = brute(full) = brute(transpositions), exhaustive n=2..10, k=2..6
Outcome criterion1() {
    std::int64_t tuples = 0, mismatches = 0;
    for (std::int64_t n = 2; n <= 10; ++n) {
        GroupSpec g({n});
        for (int k = 2; k <= 6; ++k) {
            for (auto& t : enumerate_admissible(g, k)) {
                CoverSpec c(g, std::move(t));
                bool th = all_lift_theorem(c);
                bool full = all_lift_bruteforce(c, BruteForceMode::Full);
                bool adj = all_lift_bruteforce(c, BruteForceMode::Transpositions);
                if (th != full || th != adj) ++mismatches;
                ++tuples;
            }
        }
    }
    std::ostringstream os;
    os << tuples << " tuples, " << mismatches << " mismatches";
    return {mismatches == 0 && tuples > 0, os.str()};
}

// 2. lifts = homology oracle on (cover, sigma, orientation) triples; cells
// too large for an exhaustive sweep are sampled, total >= 10^4
Outcome criterion2() {
    std::mt19937 rng(411556);
    std::int64_t triples = 0, mismatches = 0, witnesses = 0;

    auto check = [&](const CoverSpec& c, const Permutation& sigma, int orient) {
        MappingClass mc(sigma, orient);
        LiftDecision d = lifts(c, mc);
        if (d.lifts) {
            ++witnesses;
            if (!witness_certifies(c, *d.witness, sigma)) ++mismatches;
        }
        if (d.lifts != lifts_homology_oracle(c, mc)) ++mismatches;
        ++triples;
    };

    for (std::int64_t n = 2; n <= 10; ++n) {
        GroupSpec g({n});
        for (int k = 2; k <= 6; ++k) {
            auto tuples = enumerate_admissible(g, k);
            if (tuples.empty()) continue;
            std::uint64_t cell = tuples.size() * factorial(k) * 2;
            if (cell <= 200000) {
                for (const auto& t : tuples) {
                    CoverSpec c(g, t);
                    for_each_permutation_images(k, [&](const std::vector<int>& images) {
                        auto sigma = Permutation::from_images(images);
                        check(c, sigma, +1);
                        check(c, sigma, -1);
                        return true;
                    });
                }
            } else {
                for (int s = 0; s < 4000; ++s) {
                    CoverSpec c(g, tuples[rng() % tuples.size()]);
                    std::vector<int> images(static_cast<std::size_t>(k));
                    std::iota(images.begin(), images.end(), 0);
                    std::shuffle(images.begin(), images.end(), rng);
                    check(c, Permutation::from_images(images), rng() % 2 ? +1 : -1);
                }
            }
        }
    }
    std::ostringstream os;
    os << triples << " triples (" << witnesses << " witnessed), " << mismatches << " mismatches";
    return {mismatches == 0 && triples >= 10000, os.str()};
}

// 3. the 5-fold cover branched at 3 points with tuple (1,1,3)
Outcome criterion3() {
    auto c = cyclic_cover(5, {1, 1, 3});
    auto inv = surface_invariants(c);
    auto sub = liftable_subgroup(c);
    bool ok = inv.genus == 2 && inv.euler_characteristic == -2 &&
              !all_lift_theorem(c) && !all_lift_bruteforce(c, BruteForceMode::Full) &&
              sub.order == 2 && sub.members.size() == 2 && sub.members[0].is_identity() &&
              sub.members[1] == Permutation::transposition(3, 0, 1);
    std::ostringstream os;
    os << "genus " << inv.genus << ", chi " << inv.euler_characteristic
       << ", liftable subgroup order " << sub.order << " {";
    for (std::size_t i = 0; i < sub.members.size(); ++i)
        os << (i ? ", " : "") << sub.members[i].cycle_string();
    os << "}";
    return {ok, os.str()};
}

// 4. double covers (1,...,1) over Z/2, k = 2,4,...,12
Outcome criterion4() {
    int cells = 0, bad = 0;
    for (int k = 2; k <= 12; k += 2) {
        auto c = cyclic_cover(2, std::vector<std::int64_t>(static_cast<std::size_t>(k), 1));
        bool all = all_lift_theorem(c) && all_lift_bruteforce(c, BruteForceMode::Transpositions);
        if (k <= 8) all = all && all_lift_bruteforce(c, BruteForceMode::Full);
        if (!all || surface_invariants(c).genus != (k - 2) / 2) ++bad;
        ++cells;
    }
    std::ostringstream os;
    os << cells << " covers, " << bad << " failures";
    return {bad == 0, os.str()};
}

// 5. curve criterion = cyclic criterion through to_cover, n=2..10, t=1..5,
// every exponent vector with gcd(n, a_1..a_t) = 1
Outcome criterion5() {
    std::int64_t curves = 0, mismatches = 0;
    for (std::int64_t n = 2; n <= 10; ++n) {
        for (int t = 1; t <= 5; ++t) {
            std::vector<std::int64_t> exps(static_cast<std::size_t>(t), 1);
            while (true) {
                std::int64_t g = n;
                for (auto e : exps) g = std::gcd(g, e);
                if (g == 1) {
                    std::vector<CurveFactor> factors;
                    for (int i = 0; i < t; ++i) factors.push_back({Rational(i), exps[i]});
                    CurveSpec cv(n, std::move(factors));
                    if (all_lift_corollary(cv) != all_lift_theorem(to_cover(cv))) ++mismatches;
                    ++curves;
                }
                int pos = t - 1;
                while (pos >= 0 && exps[static_cast<std::size_t>(pos)] == n - 1)
                    exps[static_cast<std::size_t>(pos--)] = 1;
                if (pos < 0) break;
                ++exps[static_cast<std::size_t>(pos)];
            }
        }
    }
    std::ostringstream os;
    os << curves << " curves, " << mismatches << " mismatches";
    return {mismatches == 0 && curves > 0, os.str()};
}

// 6. every admissible 2-tuple over Z/n, n=2..30: everything lifts, genus 0
Outcome criterion6() {
    std::int64_t covers = 0, bad = 0;
    for (std::int64_t n = 2; n <= 30; ++n) {
        GroupSpec g({n});
        for (auto& t : enumerate_admissible(g, 2)) {
            CoverSpec c(g, std::move(t));
            auto inv = surface_invariants(c);
            if (!all_lift_theorem(c) || !all_lift_bruteforce(c, BruteForceMode::Full) ||
                inv.genus != 0)
                ++bad;
            ++covers;
        }
    }
    std::ostringstream os;
    os << covers << " two-point covers, " << bad << " failures";
    return {bad == 0 && covers > 0, os.str()};
}

// 7. among all-equal covers (a,...,a) with a a unit and k ≡ 0 mod n,
// n=2..10, k<=12: non-hyperbolic exactly at (2,2), (2,4), (3,3), and the
// symmetric criterion true exactly on the hyperbolic rest
Outcome criterion7() {
    std::set<std::pair<std::int64_t, int>> non_hyperbolic;
    std::int64_t covers = 0, bad = 0;
    for (std::int64_t n = 2; n <= 10; ++n) {
        for (int k = static_cast<int>(n); k <= 12; k += static_cast<int>(n)) {
            for (std::int64_t a = 1; a < n; ++a) {
                if (std::gcd(a, n) != 1) continue;
                auto c = cyclic_cover(n, std::vector<std::int64_t>(static_cast<std::size_t>(k), a));
                bool hyp = is_hyperbolic(c);
                if (!hyp) non_hyperbolic.insert({n, k});
                if (smod_iso(c) != hyp) ++bad;
                if (!all_lift_theorem(c)) ++bad;  // first-bullet covers lift everything
                ++covers;
            }
        }
    }
    std::set<std::pair<std::int64_t, int>> expected{{2, 2}, {2, 4}, {3, 3}};
    bool ok = bad == 0 && non_hyperbolic == expected;
    std::ostringstream os;
    os << covers << " all-equal covers; non-hyperbolic at {";
    bool first = true;
    for (const auto& [n, k] : non_hyperbolic) {
        os << (first ? "" : ", ") << "(" << n << "," << k << ")";
        first = false;
    }
    os << "}, " << bad << " criterion failures";
    return {ok, os.str()};
}

// 8. property bundle: witness validity, subgroup closure, equivalence
// invariance, orientation invariance, canonical-form idempotence + dedup
Outcome criterion8() {
    std::mt19937 rng(20250613);
    int failed_properties = 0;
    std::ostringstream os;

    // (a) every positive decision carries a verified witness, and the
    //     verdict is orientation invariant: n<=6, k<=5, every sigma
    {
        std::int64_t positives = 0, bad = 0;
        for (std::int64_t n = 2; n <= 6; ++n) {
            GroupSpec g({n});
            for (int k = 2; k <= 5; ++k) {
                for (auto& t : enumerate_admissible(g, k)) {
                    CoverSpec c(g, std::move(t));
                    for_each_permutation_images(k, [&](const std::vector<int>& images) {
                        auto sigma = Permutation::from_images(images);
                        auto plus = lifts(c, MappingClass(sigma, +1));
                        auto minus = lifts(c, MappingClass(sigma, -1));
                        if (plus.lifts != minus.lifts) ++bad;
                        if (plus.lifts) {
                            ++positives;
                            if (!witness_certifies(c, *plus.witness, sigma)) ++bad;
                            if (!witness_certifies(c, *minus.witness, sigma)) ++bad;
                        }
                        return true;
                    });
                }
            }
        }
        if (bad != 0 || positives == 0) ++failed_properties;
        os << positives << " witnesses verified";
    }

    // (b) liftable permutations form a subgroup: closed under composition
    //     and inverse, containing the identity
    {
        std::int64_t checked = 0, bad = 0;
        for (std::int64_t n = 2; n <= 10; ++n) {
            GroupSpec g({n});
            for (int k = 2; k <= 5; ++k) {
                auto tuples = enumerate_admissible(g, k);
                if (tuples.empty()) continue;
                for (int s = 0; s < 3 && s < static_cast<int>(tuples.size()); ++s) {
                    CoverSpec c(g, tuples[rng() % tuples.size()]);
                    auto sub = liftable_subgroup(c);
                    std::set<std::vector<int>> members;
                    for (const auto& p : sub.members) members.insert(p.images());
                    if (!members.count(Permutation::identity(k).images())) ++bad;
                    for (const auto& p : sub.members) {
                        if (!members.count(p.inverse().images())) ++bad;
                        for (const auto& q : sub.members)
                            if (!members.count(p.after(q).images())) ++bad;
                    }
                    ++checked;
                }
            }
        }
        if (bad != 0 || checked == 0) ++failed_properties;
        os << "; " << checked << " subgroups closed";
    }

    // (c) all verdicts are invariant under Aut(A) relabelings
    {
        std::int64_t checked = 0, bad = 0;
        for (std::int64_t n = 2; n <= 8; ++n) {
            GroupSpec g({n});
            auto auts = automorphisms(g);
            for (int k = 2; k <= 4; ++k) {
                for (auto& t : enumerate_admissible(g, k)) {
                    CoverSpec c(g, std::move(t));
                    const auto& psi0 = auts[rng() % auts.size()];
                    std::vector<GroupElement> mapped;
                    for (const auto& a : c.tuple()) mapped.push_back(g.apply(psi0, a));
                    CoverSpec c2(g, std::move(mapped));
                    if (all_lift_theorem(c) != all_lift_theorem(c2)) ++bad;
                    if (smod_iso(c) != smod_iso(c2)) ++bad;
                    if (surface_invariants(c).genus != surface_invariants(c2).genus) ++bad;
                    if (liftable_subgroup(c).order != liftable_subgroup(c2).order) ++bad;
                    for_each_permutation_images(k, [&](const std::vector<int>& images) {
                        auto sigma = Permutation::from_images(images);
                        if (lifts(c, MappingClass(sigma, +1)).lifts !=
                            lifts(c2, MappingClass(sigma, +1)).lifts)
                            ++bad;
                        return true;
                    });
                    ++checked;
                }
            }
        }
        if (bad != 0 || checked == 0) ++failed_properties;
        os << "; " << checked << " relabelings invariant";
    }

    // (d) canonical_form is idempotent and separates classes exactly,
    //     n<=6, k<=4, both modes
    {
        std::int64_t checked = 0, bad = 0;
        for (std::int64_t n = 2; n <= 6; ++n) {
            GroupSpec g({n});
            for (int k = 2; k <= 4; ++k) {
                auto tuples = enumerate_admissible(g, k);
                std::vector<CoverSpec> covers;
                for (auto& t : tuples) covers.emplace_back(g, std::move(t));
                for (const auto& c : covers) {
                    for (bool unlabeled : {false, true}) {
                        auto canon = canonical_form(c, unlabeled);
                        if (canonical_form(CoverSpec(g, canon), unlabeled) != canon) ++bad;
                    }
                }
                for (std::size_t i = 0; i < covers.size(); ++i)
                    for (std::size_t j = i + 1; j < covers.size(); ++j) {
                        bool same = canonical_form(covers[i]) == canonical_form(covers[j]);
                        if (same != equivalent(covers[i], covers[j]).has_value()) ++bad;
                    }
                checked += static_cast<std::int64_t>(covers.size());
            }
        }
        if (bad != 0 || checked == 0) ++failed_properties;
        os << "; " << checked << " canonical forms sound";
    }

    return {failed_properties == 0, os.str()};
}

}  // namespace

int main() {
    struct Row {
        int id;
        const char* label;
        std::function<Outcome()> run;
    };
    const std::vector<Row> rows{
        {1, "closed form = brute force, exhaustive n=2..10 k=2..6", criterion1},
        {2, "witness search = homology kernel oracle", criterion2},
        {3, "(1,1,3) over Z/5: genus 2, not all lift, subgroup {id,(1 2)}", criterion3},
        {4, "double covers k=2..12: all lift, genus (k-2)/2", criterion4},
        {5, "curve criterion = cyclic criterion, n=2..10 t=1..5", criterion5},
        {6, "every 2-point cover lifts everything, genus 0, n=2..30", criterion6},
        {7, "all-equal covers: non-hyperbolic = {(2,2),(2,4),(3,3)} = no smod iso", criterion7},
        {8, "property suite: witnesses, subgroup, invariance, canonical forms", criterion8},
    };

    int failures = 0;
    for (const auto& row : rows) {
        Outcome out;
        try {
            out = row.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        if (!out.pass) ++failures;
        std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << row.id << ": "
                  << row.label << " (" << out.stats << ")\n";
    }
    return failures;
}
