#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "branchlift/errors.hpp"

namespace branchlift {

/// A permutation of {0,...,k-1}.  Text form (cycle notation) is 1-based:
/// "(2 3)", "(1 2)(3 4)", or "id".
class Permutation {
public:
    explicit Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
        if (degree < 0) throw DimensionError("permutation degree must be non-negative");
        std::iota(images_.begin(), images_.end(), 0);
    }

    static Permutation identity(int degree) { return Permutation(degree); }

    static Permutation transposition(int degree, int i, int j) {
        Permutation p(degree);
        if (i < 0 || j < 0 || i >= degree || j >= degree)
            throw DimensionError("transposition indices out of range");
        std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(j)]);
        return p;
    }

    /// Builds from an image table images[i] = sigma(i); must be a bijection.
    static Permutation from_images(std::vector<int> images) {
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)])
                throw DimensionError("image table is not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
        Permutation p(static_cast<int>(images.size()));
        p.images_ = std::move(images);
        return p;
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    /// Composition (*this) ∘ first: apply `first`, then this.
    Permutation after(const Permutation& first) const {
        if (degree() != first.degree()) throw DimensionError("composing permutations of different degree");
        std::vector<int> out(images_.size());
        for (int i = 0; i < degree(); ++i)
            out[static_cast<std::size_t>(i)] = (*this)(first(i));
        return from_images(std::move(out));
    }

    Permutation inverse() const {
        std::vector<int> out(images_.size());
        for (int i = 0; i < degree(); ++i)
            out[static_cast<std::size_t>((*this)(i))] = i;
        return from_images(std::move(out));
    }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    /// Canonical cycle notation, 1-based, fixed points omitted; "id" for
    /// the identity.  Cycles are listed by smallest element.
    std::string cycle_string() const {
        std::string out;
        std::vector<bool> done(images_.size(), false);
        for (int i = 0; i < degree(); ++i) {
            if (done[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
            out += '(';
            int j = i;
            bool first = true;
            while (!done[static_cast<std::size_t>(j)]) {
                done[static_cast<std::size_t>(j)] = true;
                if (!first) out += ' ';
                out += std::to_string(j + 1);
                first = false;
                j = (*this)(j);
            }
            out += ')';
        }
        return out.empty() ? "id" : out;
    }

    /// Parses 1-based cycle notation over {1,...,degree}.  Cycles must be
    /// disjoint.  Accepts "id" (or "()") for the identity.
    static Permutation parse_cycles(const std::string& text, int degree) {
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        auto fail = [&](const std::string& what) -> Error {
            return Error("malformed cycle notation at position " + std::to_string(pos) + ": " + what);
        };

        skip_ws();
        if (text.compare(pos, 2, "id") == 0) {
            pos += 2;
            skip_ws();
            if (pos != text.size()) throw fail("trailing input after 'id'");
            return identity(degree);
        }

        std::vector<int> images(static_cast<std::size_t>(degree));
        std::iota(images.begin(), images.end(), 0);
        std::vector<bool> used(static_cast<std::size_t>(degree), false);

        bool any = false;
        while (true) {
            skip_ws();
            if (pos == text.size()) break;
            if (text[pos] != '(') throw fail("expected '('");
            ++pos;
            std::vector<int> cycle;
            while (true) {
                skip_ws();
                if (pos < text.size() && text[pos] == ')') {
                    ++pos;
                    break;
                }
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == start) throw fail("expected an entry or ')'");
                int v = std::stoi(text.substr(start, pos - start));
                if (v < 1 || v > degree)
                    throw Error("cycle entry " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
                if (used[static_cast<std::size_t>(v - 1)])
                    throw Error("cycle entry " + std::to_string(v) + " appears twice (cycles must be disjoint)");
                used[static_cast<std::size_t>(v - 1)] = true;
                cycle.push_back(v - 1);
            }
            for (std::size_t i = 0; i < cycle.size(); ++i)
                images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
            any = true;
        }
        if (!any) throw fail("empty permutation (write \"id\" for the identity)");
        return from_images(std::move(images));
    }

private:
    std::vector<int> images_;
};

/// Calls fn with every image table of S_degree in lexicographic order until
/// fn returns false.  Returns false if the sweep was cut short.
template <typename Fn>
bool for_each_permutation_images(int degree, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(degree));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        if (!fn(static_cast<const std::vector<int>&>(idx))) return false;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return true;
}

inline std::vector<Permutation> all_permutations(int degree) {
    std::vector<Permutation> out;
    for_each_permutation_images(degree, [&](const std::vector<int>& images) {
        out.push_back(Permutation::from_images(images));
        return true;
    });
    return out;
}

}  // namespace branchlift
