#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "branchlift/errors.hpp"

namespace branchlift {

/// Element of a finite abelian group: one coefficient per invariant
/// factor, each reduced into [0, n_j).
struct GroupElement {
    std::vector<std::int64_t> coeffs;

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
    }

    auto operator<=>(const GroupElement&) const = default;
};

/// Automorphism of a finite abelian group, stored as the images of the
/// canonical generators e_1,...,e_r of Z/n_1 ⊕ ... ⊕ Z/n_r.
struct Automorphism {
    std::vector<GroupElement> images;

    auto operator<=>(const Automorphism&) const = default;
};

/// A finite abelian group in invariant-factor form Z/n_1 ⊕ ... ⊕ Z/n_r
/// with n_1 | n_2 | ... | n_r and every n_j >= 2.  Arbitrary factor lists
/// are normalized to this form at construction (elementary divisor
/// reduction), so equal groups always compare equal.  The trivial group
/// is rejected.  All values are immutable; every operation is pure.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::int64_t> factors)
        : factors_(normalize(std::move(factors))) {}

    const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    bool is_cyclic() const { return factors_.size() == 1; }

    std::int64_t order() const {
        std::int64_t n = 1;
        for (std::int64_t f : factors_) {
            if (n > (std::int64_t{1} << 62) / f)
                throw BoundError("group order overflows 64-bit arithmetic");
            n *= f;
        }
        return n;
    }

    /// The modulus n of a cyclic group Z/n.
    std::int64_t modulus() const {
        if (!is_cyclic()) throw NotCyclicError("modulus() requires a cyclic group");
        return factors_[0];
    }

    GroupElement zero() const {
        return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
    }

    /// Reduces an arbitrary integer vector into canonical coefficients.
    GroupElement element(std::vector<std::int64_t> coeffs) const {
        if (coeffs.size() != factors_.size())
            throw DimensionError("element has " + std::to_string(coeffs.size()) +
                                 " coefficients, group has rank " + std::to_string(factors_.size()));
        for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = mod(coeffs[j], factors_[j]);
        return GroupElement{std::move(coeffs)};
    }

    /// The j-th canonical generator e_j (0-based).
    GroupElement generator(int j) const {
        auto e = zero();
        e.coeffs[static_cast<std::size_t>(j)] = 1;
        return e;
    }

    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        check_conforms(a);
        check_conforms(b);
        GroupElement out = a;
        for (std::size_t j = 0; j < factors_.size(); ++j)
            out.coeffs[j] = mod(out.coeffs[j] + b.coeffs[j], factors_[j]);
        return out;
    }

    GroupElement neg(const GroupElement& a) const {
        check_conforms(a);
        GroupElement out = a;
        for (std::size_t j = 0; j < factors_.size(); ++j) out.coeffs[j] = mod(-out.coeffs[j], factors_[j]);
        return out;
    }

    GroupElement scalar_mul(const GroupElement& a, std::int64_t s) const {
        check_conforms(a);
        GroupElement out = a;
        for (std::size_t j = 0; j < factors_.size(); ++j)
            out.coeffs[j] = mod(mod(s, factors_[j]) * out.coeffs[j], factors_[j]);
        return out;
    }

    /// Least m >= 1 with m·a = 0; equals lcm_j(n_j / gcd(c_j, n_j)).
    std::int64_t order_of(const GroupElement& a) const {
        check_conforms(a);
        std::int64_t m = 1;
        for (std::size_t j = 0; j < factors_.size(); ++j)
            m = std::lcm(m, factors_[j] / std::gcd(a.coeffs[j], factors_[j]));
        return m;
    }

    /// True iff the subgroup closure of elems is the whole group.  Cyclic
    /// groups use the gcd test; otherwise the closure is enumerated.
    bool generates(std::span<const GroupElement> elems) const {
        for (const auto& e : elems) check_conforms(e);
        if (is_cyclic()) {
            std::int64_t g = factors_[0];
            for (const auto& e : elems) g = std::gcd(g, e.coeffs[0]);
            return g == 1;
        }
        return closure_size(elems) == order();
    }

    /// Number of elements in the subgroup generated by elems.
    std::int64_t closure_size(std::span<const GroupElement> elems) const {
        std::vector<bool> in_set(static_cast<std::size_t>(order()), false);
        std::vector<std::int64_t> queue{0};
        in_set[0] = true;
        while (!queue.empty()) {
            std::int64_t s = queue.back();
            queue.pop_back();
            GroupElement base = element_at(s);
            for (const auto& e : elems) {
                std::int64_t t = index_of(add(base, e));
                if (!in_set[static_cast<std::size_t>(t)]) {
                    in_set[static_cast<std::size_t>(t)] = true;
                    queue.push_back(t);
                }
            }
        }
        return std::count(in_set.begin(), in_set.end(), true);
    }

    /// All |A| elements in lexicographic coefficient order.
    std::vector<GroupElement> elements() const {
        std::vector<GroupElement> out;
        out.reserve(static_cast<std::size_t>(order()));
        for (std::int64_t i = 0; i < order(); ++i) out.push_back(element_at(i));
        return out;
    }

    /// Position of a in elements() order (mixed radix, coeffs[0] most
    /// significant).
    std::int64_t index_of(const GroupElement& a) const {
        std::int64_t idx = 0;
        for (std::size_t j = 0; j < factors_.size(); ++j) idx = idx * factors_[j] + a.coeffs[j];
        return idx;
    }

    GroupElement element_at(std::int64_t idx) const {
        GroupElement out = zero();
        for (std::size_t j = factors_.size(); j-- > 0;) {
            out.coeffs[j] = idx % factors_[j];
            idx /= factors_[j];
        }
        return out;
    }

    /// Evaluates psi on a by extending the generator images linearly.
    GroupElement apply(const Automorphism& psi, const GroupElement& a) const {
        check_conforms(psi);
        check_conforms(a);
        GroupElement out = zero();
        for (std::size_t j = 0; j < factors_.size(); ++j)
            out = add(out, scalar_mul(psi.images[j], a.coeffs[j]));
        return out;
    }

    Automorphism identity_automorphism() const {
        Automorphism psi;
        for (int j = 0; j < rank(); ++j) psi.images.push_back(generator(j));
        return psi;
    }

    /// Composition outer ∘ inner.
    Automorphism compose(const Automorphism& outer, const Automorphism& inner) const {
        check_conforms(outer);
        check_conforms(inner);
        Automorphism out;
        for (const auto& img : inner.images) out.images.push_back(apply(outer, img));
        return out;
    }

    bool is_identity(const Automorphism& psi) const {
        check_conforms(psi);
        for (int j = 0; j < rank(); ++j)
            if (psi.images[static_cast<std::size_t>(j)] != generator(j)) return false;
        return true;
    }

    /// Well-posedness (n_j · images[j] = 0) plus surjectivity; surjective
    /// endomorphisms of a finite group are bijective.
    bool is_automorphism(const Automorphism& psi) const {
        if (psi.images.size() != factors_.size()) return false;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            if (psi.images[j].coeffs.size() != factors_.size()) return false;
            if (!scalar_mul(psi.images[j], factors_[j]).is_zero()) return false;
        }
        return generates(psi.images);
    }

    bool operator==(const GroupSpec&) const = default;

private:
    static std::int64_t mod(std::int64_t v, std::int64_t n) {
        std::int64_t r = v % n;
        return r < 0 ? r + n : r;
    }

    void check_conforms(const GroupElement& a) const {
        if (a.coeffs.size() != factors_.size())
            throw DimensionError("element rank " + std::to_string(a.coeffs.size()) +
                                 " does not match group rank " + std::to_string(factors_.size()));
    }

    void check_conforms(const Automorphism& psi) const {
        if (psi.images.size() != factors_.size())
            throw DimensionError("automorphism has " + std::to_string(psi.images.size()) +
                                 " generator images, group has rank " + std::to_string(factors_.size()));
        for (const auto& img : psi.images) check_conforms(img);
    }

    static std::vector<std::int64_t> normalize(std::vector<std::int64_t> in) {
        if (in.empty())
            throw Error("group needs at least one cyclic factor (the trivial group is not allowed)");
        for (std::int64_t f : in)
            if (f < 2) throw Error("cyclic factor " + std::to_string(f) + " is invalid (must be >= 2)");

        // Elementary divisor reduction: split every factor into prime
        // powers, then rebuild the divisibility chain from the largest
        // prime power of each prime downwards.
        std::map<std::int64_t, std::vector<std::int64_t>> powers;  // p -> p^e list, sorted desc
        std::size_t chain_len = 0;
        for (std::int64_t f : in) {
            std::int64_t rest = f;
            for (std::int64_t p = 2; p * p <= rest; ++p) {
                if (rest % p != 0) continue;
                std::int64_t q = 1;
                while (rest % p == 0) {
                    q *= p;
                    rest /= p;
                }
                powers[p].push_back(q);
            }
            if (rest > 1) powers[rest].push_back(rest);
        }
        for (auto& [p, qs] : powers) {
            std::sort(qs.begin(), qs.end(), std::greater<>());
            chain_len = std::max(chain_len, qs.size());
        }
        std::vector<std::int64_t> chain(chain_len, 1);
        for (const auto& [p, qs] : powers)
            for (std::size_t i = 0; i < qs.size(); ++i) chain[i] *= qs[i];  // chain[0] largest
        std::reverse(chain.begin(), chain.end());
        return chain;
    }

    std::vector<std::int64_t> factors_;
};

inline constexpr std::int64_t kDefaultMaxAutOrder = 64;

/// Exhaustive Aut(A) enumeration over generator-image candidates.  The
/// search is pruned by requiring, after each image choice, that the map
/// restricted to the generators chosen so far stays injective.  Results
/// are in lexicographic image order.
inline std::vector<Automorphism> automorphisms_bruteforce(const GroupSpec& g,
                                                          std::int64_t max_order = kDefaultMaxAutOrder) {
    if (g.order() > max_order)
        throw BoundError("group order " + std::to_string(g.order()) +
                         " exceeds the automorphism enumeration bound " + std::to_string(max_order));

    const auto& factors = g.invariant_factors();
    const auto all = g.elements();

    // Candidate images of e_j: elements killed by n_j.
    std::vector<std::vector<GroupElement>> candidates(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j)
        for (const auto& a : all)
            if (g.scalar_mul(a, factors[j]).is_zero()) candidates[j].push_back(a);

    std::vector<Automorphism> out;
    std::vector<GroupElement> chosen;
    std::int64_t expect = 1;  // ∏ n_l over chosen generators
    auto dfs = [&](auto&& self, std::size_t j) -> void {
        if (j == factors.size()) {
            out.push_back(Automorphism{chosen});
            return;
        }
        expect *= factors[j];
        for (const auto& img : candidates[j]) {
            chosen.push_back(img);
            if (g.closure_size(chosen) == expect) self(self, j + 1);
            chosen.pop_back();
        }
        expect /= factors[j];
    };
    dfs(dfs, 0);
    return out;
}

/// The complete list of Aut(A).  Cyclic groups take the unit fast path
/// (multiplication by each u coprime to n, ascending); everything else
/// falls back to the brute-force enumeration.
inline std::vector<Automorphism> automorphisms(const GroupSpec& g,
                                               std::int64_t max_order = kDefaultMaxAutOrder) {
    if (g.order() > max_order)
        throw BoundError("group order " + std::to_string(g.order()) +
                         " exceeds the automorphism enumeration bound " + std::to_string(max_order));
    if (g.is_cyclic()) {
        std::int64_t n = g.modulus();
        std::vector<Automorphism> out;
        for (std::int64_t u = 1; u < n; ++u)
            if (std::gcd(u, n) == 1) out.push_back(Automorphism{{g.element({u})}});
        return out;
    }
    return automorphisms_bruteforce(g, max_order);
}

}  // namespace branchlift
