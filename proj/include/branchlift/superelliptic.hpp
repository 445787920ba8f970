#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "branchlift/cover.hpp"
#include "branchlift/errors.hpp"

namespace branchlift {

/// Exact rational, reduced, denominator >= 1.  Roots only ever come from
/// integer or decimal literals, so denominators are products of 2s and 5s.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational&) const = default;

    /// Exact decimal form: "3", "-1.5", "0.04".  Requires the denominator
    /// to divide a power of ten.
    std::string decimal_string() const {
        if (den == 1) return std::to_string(num);
        std::int64_t scale = 1;
        for (int i = 0; i < 18; ++i) {
            scale *= 10;
            if (scale % den == 0) {
                std::int64_t mag = num < 0 ? -num : num;
                std::int64_t scaled = mag * (scale / den);
                std::string digits = std::to_string(scaled);
                std::string zeros(std::to_string(scale).size() - 1, '0');
                if (digits.size() < zeros.size() + 1) digits.insert(0, zeros.size() + 1 - digits.size(), '0');
                digits.insert(digits.size() - zeros.size(), ".");
                while (digits.back() == '0') digits.pop_back();
                if (digits.back() == '.') digits.pop_back();
                return (num < 0 ? "-" : "") + digits;
            }
        }
        throw Error("rational " + std::to_string(num) + "/" + std::to_string(den) +
                    " has no finite decimal form");
    }
};

struct CurveFactor {
    Rational root;
    std::int64_t exponent = 1;

    bool operator==(const CurveFactor&) const = default;
};

/// Superelliptic curve y^n = (x - z_1)^{a_1} ··· (x - z_t)^{a_t} with
/// distinct roots z_i and exponents 1 <= a_i <= n-1.  Root values matter
/// only for distinctness; the branching data is n and the exponents.
class CurveSpec {
public:
    CurveSpec(std::int64_t n, std::vector<CurveFactor> factors)
        : n_(n), factors_(std::move(factors)) {
        if (n_ < 2)
            throw CurveError(CurveErrorKind::DegenerateN,
                             "exponent of y must be at least 2, got " + std::to_string(n_));
        if (factors_.empty())
            throw CurveError(CurveErrorKind::Syntax, "a curve needs at least one factor");
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            std::int64_t a = factors_[i].exponent;
            if (a < 1 || a > n_ - 1)
                throw CurveError(CurveErrorKind::ExponentOutOfRange,
                                 "exponent " + std::to_string(a) + " of factor " +
                                     std::to_string(i + 1) + " is outside 1.." + std::to_string(n_ - 1) +
                                     (a >= n_ ? " (reduce it mod " + std::to_string(n_) + ")" : ""),
                                 CurveError::npos, static_cast<std::ptrdiff_t>(i));
            for (std::size_t j = 0; j < i; ++j)
                if (factors_[j].root == factors_[i].root)
                    throw CurveError(CurveErrorKind::DuplicateRoot,
                                     "root " + factors_[i].root.decimal_string() + " appears twice");
        }
    }

    std::int64_t n() const { return n_; }
    const std::vector<CurveFactor>& factors() const { return factors_; }
    int t() const { return static_cast<int>(factors_.size()); }

    bool operator==(const CurveSpec&) const = default;

private:
    std::int64_t n_;
    std::vector<CurveFactor> factors_;
};

namespace detail {

struct CurveCursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() const { return pos >= text.size(); }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw CurveError(CurveErrorKind::Syntax, what + " at position " + std::to_string(pos), pos);
    }

    void expect(char c, const std::string& what) {
        skip_ws();
        if (at_end() || text[pos] != c) fail(what);
        ++pos;
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        if (pos - start > 18) fail("integer literal too long");
        std::int64_t v = 0;
        for (std::size_t i = start; i < pos; ++i) v = v * 10 + (text[i] - '0');
        return v;
    }

    // digits, optionally with a decimal point: "12", "0.25"
    Rational number() {
        std::int64_t whole = integer();
        if (whole > 1'000'000'000'000LL) fail("root magnitude too large");
        if (peek() != '.') return Rational(whole);
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits after the decimal point");
        if (pos - start > 15) fail("decimal literal too long");
        std::int64_t frac = 0, den = 1;
        for (std::size_t i = start; i < pos; ++i) {
            frac = frac * 10 + (text[i] - '0');
            den *= 10;
        }
        return Rational(whole * den + frac, den);
    }

    // a root: NUMBER or (-NUMBER); negative roots must be parenthesized,
    // so "(x--3)" stays a syntax error.
    Rational root() {
        skip_ws();
        if (peek() == '(') {
            ++pos;
            skip_ws();
            if (peek() != '-') fail("expected '-' in a parenthesized negative root");
            ++pos;
            Rational r = number();
            expect(')', "expected ')' closing the negative root");
            return Rational(-r.num, r.den);
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a root (integer, decimal, or (-value))");
        return number();
    }
};

}  // namespace detail

/// Parses "y^N = (x-R)^E (x-R)^E ..." with optional exponents (default 1),
/// arbitrary whitespace between tokens, and R an integer or decimal;
/// negative roots are written (x-(-3)).  Rejections carry the offending
/// position.
inline CurveSpec parse_curve(std::string_view text) {
    detail::CurveCursor cur{text};
    cur.expect('y', "expected 'y'");
    cur.expect('^', "expected '^' after 'y'");
    std::int64_t n = cur.integer();
    if (n < 2)
        throw CurveError(CurveErrorKind::DegenerateN,
                         "exponent of y must be at least 2, got " + std::to_string(n));
    cur.expect('=', "expected '='");

    std::vector<CurveFactor> factors;
    while (true) {
        cur.skip_ws();
        if (cur.at_end()) break;
        std::size_t factor_pos = cur.pos;
        cur.expect('(', "expected '(' starting a factor");
        cur.expect('x', "expected 'x' in a factor");
        cur.expect('-', "expected '-' after 'x'");
        Rational root = cur.root();
        cur.expect(')', "expected ')' closing the factor");

        std::int64_t exponent = 1;
        std::size_t exp_pos = cur.pos;
        cur.skip_ws();
        if (cur.peek() == '^') {
            ++cur.pos;
            exp_pos = cur.pos;
            exponent = cur.integer();
        } else {
            cur.pos = exp_pos;  // whitespace belongs to the next factor
        }

        if (exponent < 1 || exponent > n - 1)
            throw CurveError(CurveErrorKind::ExponentOutOfRange,
                             "exponent " + std::to_string(exponent) + " of factor " +
                                 std::to_string(factors.size() + 1) + " is outside 1.." +
                                 std::to_string(n - 1) +
                                 (exponent >= n ? " (reduce it mod " + std::to_string(n) + ")" : ""),
                             exp_pos, static_cast<std::ptrdiff_t>(factors.size()));
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (factors[j].root == root)
                throw CurveError(CurveErrorKind::DuplicateRoot,
                                 "root " + root.decimal_string() + " appears twice", factor_pos);
        factors.push_back(CurveFactor{root, exponent});
    }
    if (factors.empty()) {
        detail::CurveCursor at{text, text.size()};
        at.fail("expected at least one factor");
    }
    return CurveSpec(n, std::move(factors));
}

/// Canonical text form; parse_curve(render_curve(cv)) == cv.
inline std::string render_curve(const CurveSpec& cv) {
    std::string out = "y^" + std::to_string(cv.n()) + " =";
    for (const auto& f : cv.factors()) {
        const Rational& r = f.root;
        out += " (x-";
        if (r.num < 0)
            out += "(" + r.decimal_string() + ")";
        else
            out += r.decimal_string();
        out += ")";
        if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    }
    return out;
}

/// gcd(n, a_1, ..., a_t) = 1; equivalently, the exponent residues
/// generate Z/n, which is what makes the curve irreducible.
inline bool is_irreducible(const CurveSpec& cv) {
    std::int64_t g = cv.n();
    for (const auto& f : cv.factors()) g = std::gcd(g, f.exponent);
    return g == 1;
}

/// Branching over infinity happens iff Σ a_i is not 0 mod n.
inline bool has_infinity_branch(const CurveSpec& cv) {
    std::int64_t sum = 0;
    for (const auto& f : cv.factors()) sum += f.exponent;
    return sum % cv.n() != 0;
}

/// The branched cover the curve's x-projection defines: tuple
/// (a_1,...,a_t) over Z/n, extended by -Σ a_i when infinity branches.
inline CoverSpec to_cover(const CurveSpec& cv) {
    if (!is_irreducible(cv))
        throw CurveError(CurveErrorKind::Reducible,
                         "gcd(n, exponents) > 1: the curve is reducible and defines no connected cover");
    const std::int64_t n = cv.n();
    std::vector<std::int64_t> residues;
    std::int64_t sum = 0;
    for (const auto& f : cv.factors()) {
        residues.push_back(f.exponent);
        sum += f.exponent;
    }
    if (sum % n != 0) residues.push_back(n - sum % n);
    return cyclic_cover(n, residues);
}

/// Closed form for curves: every homeomorphism of the base lifts iff the
/// exponents are all equal with t ≡ 0 or -1 mod n, or n >= 3 with t = 1,
/// or n >= 3 with t = 2 and a_1 ≡ -a_2 mod n.  Always agrees with the
/// cyclic criterion applied to to_cover.
inline bool all_lift_corollary(const CurveSpec& cv) {
    if (!is_irreducible(cv))
        throw CurveError(CurveErrorKind::Reducible,
                         "gcd(n, exponents) > 1: the curve is reducible and defines no connected cover");
    const std::int64_t n = cv.n();
    const std::int64_t t = cv.t();

    bool all_equal = true;
    for (const auto& f : cv.factors())
        if (f.exponent != cv.factors()[0].exponent) all_equal = false;

    if (all_equal && (t % n == 0 || t % n == n - 1)) return true;
    if (n >= 3 && t == 1) return true;
    return n >= 3 && t == 2 &&
           (cv.factors()[0].exponent + cv.factors()[1].exponent) % n == 0;
}

}  // namespace branchlift
