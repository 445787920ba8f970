#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "branchlift/abelian_group.hpp"
#include "branchlift/cover.hpp"
#include "branchlift/errors.hpp"
#include "branchlift/homology.hpp"
#include "branchlift/permutation.hpp"

namespace branchlift {

/// Verdict of a lift decision.  lifts is true iff witness is present; the
/// witness satisfies apply(psi, a_i) = a_{σ(i)} for every i and is checked
/// before it is returned.
struct LiftDecision {
    bool lifts = false;
    std::optional<Automorphism> witness;
};

/// The subgroup of S_k of permutations induced by liftable homeomorphisms.
struct LiftableSubgroup {
    std::uint64_t order = 0;
    std::vector<Permutation> members;
    bool is_full = false;
};

inline constexpr int kDefaultMaxFullK = 8;

namespace detail {

/// Witness test against a raw image table.  The cyclic path scans units
/// u ascending and checks u·a_i ≡ a_{σ(i)} directly on residues, without
/// allocating; the generic path scans a pre-enumerated Aut(A) list.
inline std::optional<std::int64_t> cyclic_witness_unit(const CoverSpec& c,
                                                       const std::vector<int>& sigma_images) {
    const std::int64_t n = c.group().modulus();
    const auto& tuple = c.tuple();
    const int k = c.k();
    for (std::int64_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        bool ok = true;
        for (int i = 0; i < k; ++i) {
            std::int64_t lhs = (u * tuple[static_cast<std::size_t>(i)].coeffs[0]) % n;
            if (lhs != tuple[static_cast<std::size_t>(sigma_images[static_cast<std::size_t>(i)])].coeffs[0]) {
                ok = false;
                break;
            }
        }
        if (ok) return u;
    }
    return std::nullopt;
}

inline bool generic_has_witness(const CoverSpec& c, const std::vector<int>& sigma_images,
                                const std::vector<Automorphism>& auts) {
    const auto& g = c.group();
    const auto& tuple = c.tuple();
    for (const auto& psi : auts) {
        bool ok = true;
        for (int i = 0; i < c.k(); ++i) {
            if (g.apply(psi, tuple[static_cast<std::size_t>(i)]) !=
                tuple[static_cast<std::size_t>(sigma_images[static_cast<std::size_t>(i)])]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

inline bool has_witness(const CoverSpec& c, const std::vector<int>& sigma_images,
                        const std::vector<Automorphism>* auts, std::int64_t max_aut_order) {
    if (c.group().is_cyclic()) return cyclic_witness_unit(c, sigma_images).has_value();
    if (auts) return generic_has_witness(c, sigma_images, *auts);
    return generic_has_witness(c, sigma_images, automorphisms(c.group(), max_aut_order));
}

inline bool theorem_first_bullet(const CoverSpec& c) {
    const std::int64_t n = c.group().modulus();
    const auto& tuple = c.tuple();
    for (const auto& a : tuple)
        if (a != tuple[0]) return false;
    return std::gcd(tuple[0].coeffs[0], n) == 1 && c.k() % n == 0;
}

}  // namespace detail

/// Some ψ ∈ Aut(A) with ψ(a_i) = a_{σ(i)} for all i, or nullopt.  Cyclic
/// groups scan units (each candidate verified on every coordinate);
/// everything else searches the full Aut(A) enumeration.
inline std::optional<Automorphism> find_witness(const CoverSpec& c, const Permutation& sigma,
                                                std::int64_t max_aut_order = kDefaultMaxAutOrder) {
    if (sigma.degree() != c.k())
        throw DimensionError("permutation degree does not match the number of branch points");
    const auto& g = c.group();
    if (g.is_cyclic()) {
        auto u = detail::cyclic_witness_unit(c, sigma.images());
        if (!u) return std::nullopt;
        return Automorphism{{g.element({*u})}};
    }
    for (const auto& psi : automorphisms(g, max_aut_order)) {
        bool ok = true;
        for (int i = 0; i < c.k(); ++i) {
            if (g.apply(psi, c.tuple()[static_cast<std::size_t>(i)]) !=
                c.tuple()[static_cast<std::size_t>(sigma(i))]) {
                ok = false;
                break;
            }
        }
        if (ok) return psi;
    }
    return std::nullopt;
}

/// Decides whether the homeomorphisms inducing mc lift.  The verdict does
/// not depend on mc.orientation: negation is an automorphism, so a witness
/// for (σ, +1) converts to one for (σ, -1) and back.  The returned witness
/// always certifies the permutation equation a_{σ(i)} = ψ(a_i); for an
/// orientation-reversing class the deck-level witness is neg ∘ ψ.
inline LiftDecision lifts(const CoverSpec& c, const MappingClass& mc,
                          std::int64_t max_aut_order = kDefaultMaxAutOrder) {
    auto psi = find_witness(c, mc.sigma, max_aut_order);
    if (!psi) return LiftDecision{false, std::nullopt};
    const auto& g = c.group();
    for (int i = 0; i < c.k(); ++i)
        if (g.apply(*psi, c.tuple()[static_cast<std::size_t>(i)]) !=
            c.tuple()[static_cast<std::size_t>(mc.sigma(i))])
            throw Error("internal: witness failed verification");
    return LiftDecision{true, std::move(psi)};
}

enum class BruteForceMode {
    Transpositions,  // adjacent transpositions only; they generate S_k and
                     // liftable permutations form a subgroup
    Full,            // all k! permutations
};

/// True iff every homeomorphism of the base sphere lifts, by direct
/// witness search over permutations.
inline bool all_lift_bruteforce(const CoverSpec& c, BruteForceMode mode,
                                std::int64_t max_aut_order = kDefaultMaxAutOrder,
                                int max_full_k = kDefaultMaxFullK) {
    const int k = c.k();
    std::vector<Automorphism> auts;
    const std::vector<Automorphism>* auts_ptr = nullptr;
    if (!c.group().is_cyclic()) {
        auts = automorphisms(c.group(), max_aut_order);
        auts_ptr = &auts;
    }

    if (mode == BruteForceMode::Transpositions) {
        std::vector<int> images(static_cast<std::size_t>(k));
        std::iota(images.begin(), images.end(), 0);
        for (int i = 0; i + 1 < k; ++i) {
            std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(i + 1)]);
            bool ok = detail::has_witness(c, images, auts_ptr, max_aut_order);
            std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(i + 1)]);
            if (!ok) return false;
        }
        return true;
    }

    if (k > max_full_k)
        throw BoundError("full brute force over " + std::to_string(k) +
                         "! permutations exceeds the bound k <= " + std::to_string(max_full_k));
    return for_each_permutation_images(k, [&](const std::vector<int>& images) {
        return detail::has_witness(c, images, auts_ptr, max_aut_order);
    });
}

/// Closed-form answer for cyclic deck groups: every homeomorphism lifts
/// iff either all a_i are equal to a generator and k ≡ 0 mod n, or k = 2
/// with n >= 3 and a_1 a generator (a_2 = -a_1 is then automatic).
inline bool all_lift_theorem(const CoverSpec& c) {
    if (!c.group().is_cyclic())
        throw NotCyclicError("the closed-form criterion is proven for cyclic deck groups only");
    const std::int64_t n = c.group().modulus();
    if (detail::theorem_first_bullet(c)) return true;
    return c.k() == 2 && n >= 3 && std::gcd(c.tuple()[0].coeffs[0], n) == 1;
}

/// The exact set {σ : a witness exists}, with its subgroup structure
/// verified: contains the identity, closed under composition.
inline LiftableSubgroup liftable_subgroup(const CoverSpec& c,
                                          std::int64_t max_aut_order = kDefaultMaxAutOrder,
                                          int max_k = kDefaultMaxFullK) {
    const int k = c.k();
    if (k > max_k)
        throw BoundError("listing liftable permutations for k = " + std::to_string(k) +
                         " exceeds the bound k <= " + std::to_string(max_k));
    std::vector<Automorphism> auts;
    const std::vector<Automorphism>* auts_ptr = nullptr;
    if (!c.group().is_cyclic()) {
        auts = automorphisms(c.group(), max_aut_order);
        auts_ptr = &auts;
    }

    LiftableSubgroup out;
    for_each_permutation_images(k, [&](const std::vector<int>& images) {
        if (detail::has_witness(c, images, auts_ptr, max_aut_order))
            out.members.push_back(Permutation::from_images(images));
        return true;
    });
    out.order = out.members.size();

    std::uint64_t full = 1;
    for (int i = 2; i <= k; ++i) full *= static_cast<std::uint64_t>(i);
    out.is_full = out.order == full;

    if (out.members.empty() || !out.members.front().is_identity())
        throw Error("internal: liftable permutations must contain the identity");
    if (!out.is_full) {
        std::set<std::vector<int>> member_set;
        for (const auto& p : out.members) member_set.insert(p.images());
        for (const auto& p : out.members)
            for (const auto& q : out.members)
                if (!member_set.count(p.after(q).images()))
                    throw Error("internal: liftable permutations are not closed under composition");
    }
    return out;
}

/// Whether the symmetric mapping class group of the cover, mod the deck
/// group, is the full mapping class group of the base sphere: the
/// all-equal criterion must hold and (n,k) must avoid the non-hyperbolic
/// cases (2,2), (2,4), (3,3).
inline bool smod_iso(const CoverSpec& c) {
    if (!c.group().is_cyclic())
        throw NotCyclicError("the symmetric mapping class criterion needs a cyclic deck group");
    if (!detail::theorem_first_bullet(c)) return false;
    const std::int64_t n = c.group().modulus();
    const int k = c.k();
    return !((n == 2 && k == 2) || (n == 2 && k == 4) || (n == 3 && k == 3));
}

}  // namespace branchlift
