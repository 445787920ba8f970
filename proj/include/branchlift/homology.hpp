#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "branchlift/abelian_group.hpp"
#include "branchlift/cover.hpp"
#include "branchlift/errors.hpp"
#include "branchlift/permutation.hpp"

namespace branchlift {

/// First homology class of the k-punctured sphere, written in the classes
/// x_1,...,x_k of loops around the punctures.  The sphere relation
/// Σ x_i = 0 eliminates x_k, so the stored length-k coefficient vector is
/// kept reduced with last coordinate 0; equality is equality of reduced
/// coefficients.
class HomologyClass {
public:
    HomologyClass(int k, std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
        if (k < 2 || coeffs_.size() != static_cast<std::size_t>(k))
            throw DimensionError("homology class needs exactly k coefficients, k >= 2");
        std::int64_t last = coeffs_.back();
        for (auto& c : coeffs_) c -= last;
    }

    /// The class x_i of the loop around the i-th puncture (0-based).
    static HomologyClass puncture_class(int k, int i) {
        if (i < 0 || i >= k) throw DimensionError("puncture index out of range");
        std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
        c[static_cast<std::size_t>(i)] = 1;
        return HomologyClass(k, std::move(c));
    }

    int k() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    bool operator==(const HomologyClass&) const = default;

private:
    std::vector<std::int64_t> coeffs_;
};

/// What a sphere homeomorphism does to the punctures: the induced
/// permutation plus an orientation sign (+1 preserving, -1 reversing).
struct MappingClass {
    Permutation sigma;
    int orientation = +1;

    MappingClass(Permutation s, int orient) : sigma(std::move(s)), orientation(orient) {
        if (orientation != 1 && orientation != -1)
            throw DimensionError("orientation must be +1 or -1");
    }

    int k() const { return sigma.degree(); }
};

/// outer ∘ inner: apply inner first.
inline MappingClass compose(const MappingClass& outer, const MappingClass& inner) {
    return MappingClass(outer.sigma.after(inner.sigma), outer.orientation * inner.orientation);
}

/// x_i ↦ orientation · x_{σ(i)}, extended linearly and re-reduced.
inline HomologyClass induced_action(const MappingClass& mc, const HomologyClass& c) {
    if (mc.k() != c.k()) throw DimensionError("mapping class and homology class have different k");
    std::vector<std::int64_t> out(static_cast<std::size_t>(c.k()), 0);
    for (int i = 0; i < c.k(); ++i)
        out[static_cast<std::size_t>(mc.sigma(i))] =
            mc.orientation * c.coeffs()[static_cast<std::size_t>(i)];
    return HomologyClass(c.k(), std::move(out));
}

/// Homomorphism H_1(Σ_{0,k};Z) → A given by the images of x_1,...,x_k.
/// The images must sum to zero, or the sphere relation would not map to 0.
class TupleHomomorphism {
public:
    TupleHomomorphism(GroupSpec group, std::vector<GroupElement> values)
        : group_(std::move(group)), values_(std::move(values)) {
        if (values_.size() < 2) throw DimensionError("tuple homomorphism needs k >= 2 values");
        auto sum = group_.zero();
        for (const auto& v : values_) sum = group_.add(sum, v);
        if (!sum.is_zero())
            throw Error("tuple homomorphism values must sum to zero in the group");
    }

    static TupleHomomorphism of_cover(const CoverSpec& c) {
        return TupleHomomorphism(c.group(), c.tuple());
    }

    const GroupSpec& group() const { return group_; }
    const std::vector<GroupElement>& values() const { return values_; }
    int k() const { return static_cast<int>(values_.size()); }

    /// φ(c) = Σ c_i · values[i]; well defined on reduced classes because
    /// the values sum to zero.
    GroupElement evaluate(const HomologyClass& c) const {
        if (c.k() != k()) throw DimensionError("homology class has wrong k for this homomorphism");
        auto out = group_.zero();
        for (int i = 0; i < k(); ++i)
            out = group_.add(out, group_.scalar_mul(values_[static_cast<std::size_t>(i)],
                                                    c.coeffs()[static_cast<std::size_t>(i)]));
        return out;
    }

    bool operator==(const TupleHomomorphism&) const = default;

private:
    GroupSpec group_;
    std::vector<GroupElement> values_;
};

/// φ ∘ f_*: the homomorphism x_i ↦ orientation · φ(x_{σ(i)}).
inline TupleHomomorphism pullback(const TupleHomomorphism& phi, const MappingClass& mc) {
    if (phi.k() != mc.k()) throw DimensionError("mapping class has wrong k for this homomorphism");
    const auto& g = phi.group();
    std::vector<GroupElement> out;
    out.reserve(phi.values().size());
    for (int i = 0; i < phi.k(); ++i) {
        GroupElement v = phi.values()[static_cast<std::size_t>(mc.sigma(i))];
        out.push_back(mc.orientation == 1 ? v : g.neg(v));
    }
    return TupleHomomorphism(g, std::move(out));
}

namespace detail {

/// Basis of the integer kernel {u ∈ Z^c : mat·u = 0} of an r × c integer
/// matrix, by column-style Hermite reduction: gcd column operations bring
/// the matrix to echelon form while the same operations are applied to an
/// identity matrix; the transform columns beyond the pivots are a kernel
/// basis.  Exact integer arithmetic throughout.
inline std::vector<std::vector<std::int64_t>> integer_kernel_basis(
    std::vector<std::vector<std::int64_t>> mat) {
    const std::size_t rows = mat.size();
    const std::size_t cols = rows == 0 ? 0 : mat[0].size();

    std::vector<std::vector<std::int64_t>> transform(cols, std::vector<std::int64_t>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) transform[j][j] = 1;  // columns of the identity

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(mat[i][a], mat[i][b]);
        std::swap(transform[a], transform[b]);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t i = 0; i < rows; ++i) mat[i][dst] += q * mat[i][src];
        for (std::size_t i = 0; i < cols; ++i) transform[dst][i] += q * transform[src][i];
    };

    std::size_t pivot = 0;
    for (std::size_t row = 0; row < rows && pivot < cols; ++row) {
        std::size_t j = pivot;
        while (j < cols && mat[row][j] == 0) ++j;
        if (j == cols) continue;
        if (j != pivot) swap_cols(pivot, j);
        for (std::size_t col = pivot + 1; col < cols; ++col) {
            while (mat[row][col] != 0) {
                std::int64_t q = mat[row][pivot] / mat[row][col];
                add_col(pivot, col, -q);
                swap_cols(pivot, col);
            }
        }
        ++pivot;
    }

    std::vector<std::vector<std::int64_t>> kernel;
    for (std::size_t j = pivot; j < cols; ++j) kernel.push_back(transform[j]);
    return kernel;
}

}  // namespace detail

/// Generators of the kernel lattice {v ∈ Z^{k-1} : Σ v_i · values[i] = 0}
/// of φ in the reduced basis x_1,...,x_{k-1}.  The lattice has full rank
/// k-1 and index |A| in Z^{k-1}.  Computed exactly: the congruences
/// Σ v_i·coeff_j(values[i]) ≡ 0 mod n_j become the integer kernel of
/// [coeff matrix | diag(n_j)], projected back to the v coordinates.
inline std::vector<std::vector<std::int64_t>> kernel_generators(const TupleHomomorphism& phi) {
    const auto& g = phi.group();
    if (!g.generates(phi.values()))
        throw NonSurjectiveError("kernel lattice requires a surjective homomorphism");

    const std::size_t m = static_cast<std::size_t>(phi.k()) - 1;
    const std::size_t r = static_cast<std::size_t>(g.rank());
    std::vector<std::vector<std::int64_t>> mat(r, std::vector<std::int64_t>(m + r, 0));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < m; ++i) mat[j][i] = phi.values()[i].coeffs[j];
        mat[j][m + j] = g.invariant_factors()[j];
    }

    auto kernel = detail::integer_kernel_basis(std::move(mat));
    std::vector<std::vector<std::int64_t>> gens;
    gens.reserve(kernel.size());
    for (auto& v : kernel) {
        std::vector<std::int64_t> proj(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
        // flip sign so the leading nonzero entry is positive
        for (std::int64_t c : proj) {
            if (c == 0) continue;
            if (c < 0)
                for (auto& x : proj) x = -x;
            break;
        }
        gens.push_back(std::move(proj));
    }
    return gens;
}

/// True iff ker(φ) = ker(ψ), by double containment on generators: every
/// generator of one kernel must evaluate to zero under the other map.
inline bool kernels_equal(const TupleHomomorphism& phi, const TupleHomomorphism& psi) {
    if (phi.group() != psi.group() || phi.k() != psi.k())
        throw DimensionError("kernel comparison needs the same group and the same k");
    const auto& g = phi.group();

    auto killed_by = [&](const std::vector<std::int64_t>& v, const TupleHomomorphism& hom) {
        auto sum = g.zero();
        for (std::size_t i = 0; i < v.size(); ++i)
            sum = g.add(sum, g.scalar_mul(hom.values()[i], v[i]));
        return sum.is_zero();
    };

    for (const auto& v : kernel_generators(phi))
        if (!killed_by(v, psi)) return false;
    for (const auto& v : kernel_generators(psi))
        if (!killed_by(v, phi)) return false;
    return true;
}

/// Kernel-equality lifting test: f lifts iff ker(φ f_*) = ker(φ), where φ
/// is the homomorphism defined by the cover's tuple.  Independent of the
/// witness search in the lifting module, and must agree with it.
inline bool lifts_homology_oracle(const CoverSpec& cover, const MappingClass& mc) {
    if (mc.k() != cover.k()) throw DimensionError("mapping class has wrong k for this cover");
    auto phi = TupleHomomorphism::of_cover(cover);
    return kernels_equal(pullback(phi, mc), phi);
}

}  // namespace branchlift
