#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "branchlift/abelian_group.hpp"
#include "branchlift/errors.hpp"

namespace branchlift {

/// A branched cover of the 2-sphere with finite abelian deck group A,
/// encoded by an admissible tuple: nonzero elements a_1,...,a_k of A
/// (one per branch point) that sum to zero and generate A.  Validation
/// happens at construction; the violated clause is reported exactly.
class CoverSpec {
public:
    CoverSpec(GroupSpec group, std::vector<GroupElement> tuple)
        : group_(std::move(group)), tuple_(std::move(tuple)) {
        if (tuple_.size() < 2)
            throw AdmissibilityError(AdmissibilityClause::TupleTooShort,
                                     "a cover needs at least 2 branch points, got " +
                                         std::to_string(tuple_.size()));
        auto sum = group_.zero();
        for (std::size_t i = 0; i < tuple_.size(); ++i) {
            if (tuple_[i].is_zero())
                throw AdmissibilityError(AdmissibilityClause::ZeroEntry,
                                         "tuple entry " + std::to_string(i + 1) + " is zero",
                                         static_cast<std::ptrdiff_t>(i));
            sum = group_.add(sum, tuple_[i]);
        }
        if (!sum.is_zero())
            throw AdmissibilityError(AdmissibilityClause::NonzeroSum, "tuple entries do not sum to zero");
        if (!group_.generates(tuple_))
            throw AdmissibilityError(AdmissibilityClause::NotGenerating,
                                     "tuple entries do not generate the deck group");
    }

    const GroupSpec& group() const { return group_; }
    const std::vector<GroupElement>& tuple() const { return tuple_; }
    int k() const { return static_cast<int>(tuple_.size()); }

    bool operator==(const CoverSpec&) const = default;

private:
    GroupSpec group_;
    std::vector<GroupElement> tuple_;
};

/// Convenience for the common cyclic case: residues mod n.
inline CoverSpec cyclic_cover(std::int64_t n, const std::vector<std::int64_t>& residues) {
    GroupSpec g({n});
    std::vector<GroupElement> tuple;
    tuple.reserve(residues.size());
    for (std::int64_t r : residues) tuple.push_back(g.element({r}));
    return CoverSpec(std::move(g), std::move(tuple));
}

/// Topological invariants of the covering surface (closed orientable).
struct SurfaceInvariants {
    std::int64_t euler_characteristic = 0;
    std::int64_t genus = 0;
    bool hyperbolic = false;

    bool operator==(const SurfaceInvariants&) const = default;
};

/// Riemann-Hurwitz: each branch point i has |A| / ord(a_i) preimages, so
/// χ = |A|·(2 − k) + Σ_i |A| / ord(a_i).  χ is always even.
inline SurfaceInvariants surface_invariants(const CoverSpec& c) {
    const auto& g = c.group();
    std::int64_t chi = g.order() * (2 - c.k());
    for (const auto& a : c.tuple()) chi += g.order() / g.order_of(a);
    assert((2 - chi) % 2 == 0);
    return SurfaceInvariants{chi, (2 - chi) / 2, chi < 0};
}

inline bool is_hyperbolic(const CoverSpec& c) {
    return surface_invariants(c).euler_characteristic < 0;
}

/// Witness automorphism with psi(a_i) = a'_i for all i, if the two covers
/// are equivalent; nullopt otherwise.  Positional: order matters.
inline std::optional<Automorphism> equivalent(const CoverSpec& c1, const CoverSpec& c2,
                                              std::int64_t max_aut_order = kDefaultMaxAutOrder) {
    if (c1.group() != c2.group() || c1.k() != c2.k()) return std::nullopt;
    const auto& g = c1.group();
    if (c1.tuple() == c2.tuple()) return g.identity_automorphism();

    auto matches = [&](const Automorphism& psi) {
        for (int i = 0; i < c1.k(); ++i)
            if (g.apply(psi, c1.tuple()[static_cast<std::size_t>(i)]) !=
                c2.tuple()[static_cast<std::size_t>(i)])
                return false;
        return true;
    };

    if (g.is_cyclic()) {
        std::int64_t n = g.modulus();
        for (std::int64_t u = 1; u < n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            Automorphism psi{{g.element({u})}};
            if (matches(psi)) return psi;
        }
        return std::nullopt;
    }
    for (const auto& psi : automorphisms(g, max_aut_order))
        if (matches(psi)) return psi;
    return std::nullopt;
}

/// Lexicographically least tuple over the Aut(A)-orbit (labeled mode) or
/// the Aut(A) × S_k-orbit (unlabeled mode, which sorts each image tuple).
/// Idempotent; two covers have equal canonical forms iff equivalent.
inline std::vector<GroupElement> canonical_form(const CoverSpec& c, bool unlabeled = false,
                                                std::int64_t max_aut_order = kDefaultMaxAutOrder) {
    const auto& g = c.group();
    std::optional<std::vector<GroupElement>> best;

    auto consider = [&](const Automorphism& psi) {
        std::vector<GroupElement> mapped;
        mapped.reserve(c.tuple().size());
        for (const auto& a : c.tuple()) mapped.push_back(g.apply(psi, a));
        if (unlabeled) std::sort(mapped.begin(), mapped.end());
        if (!best || mapped < *best) best = std::move(mapped);
    };

    if (g.is_cyclic()) {
        std::int64_t n = g.modulus();
        for (std::int64_t u = 1; u < n; ++u)
            if (std::gcd(u, n) == 1) consider(Automorphism{{g.element({u})}});
    } else {
        for (const auto& psi : automorphisms(g, max_aut_order)) consider(psi);
    }
    return *best;
}

}  // namespace branchlift
