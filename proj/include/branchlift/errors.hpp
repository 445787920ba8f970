#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace branchlift {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element, tuple, or permutation does not conform to the group or
/// cover it is used with (wrong rank, wrong number of branch points).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An enumeration or search would exceed its configured bound.  Raised
/// instead of truncating silently.
class BoundError : public Error {
public:
    using Error::Error;
};

/// An operation defined only for cyclic deck groups was called on a
/// group with more than one invariant factor.
class NotCyclicError : public Error {
public:
    using Error::Error;
};

/// The values of a tuple homomorphism do not generate the target group,
/// so its kernel lattice would not have index |A|.
class NonSurjectiveError : public Error {
public:
    using Error::Error;
};

/// Which admissibility requirement a candidate tuple violates.
enum class AdmissibilityClause {
    TupleTooShort,
    ZeroEntry,
    NonzeroSum,
    NotGenerating,
};

inline const char* to_string(AdmissibilityClause c) {
    switch (c) {
        case AdmissibilityClause::TupleTooShort: return "TupleTooShort";
        case AdmissibilityClause::ZeroEntry: return "ZeroEntry";
        case AdmissibilityClause::NonzeroSum: return "NonzeroSum";
        case AdmissibilityClause::NotGenerating: return "NotGenerating";
    }
    return "?";
}

/// Structured rejection of a tuple that fails admissibility validation.
/// `index()` is the offending tuple position (0-based) for ZeroEntry,
/// -1 otherwise.
class AdmissibilityError : public Error {
public:
    AdmissibilityError(AdmissibilityClause clause, const std::string& msg,
                       std::ptrdiff_t index = -1)
        : Error(std::string(to_string(clause)) + ": " + msg),
          clause_(clause),
          index_(index) {}

    AdmissibilityClause clause() const { return clause_; }
    std::ptrdiff_t index() const { return index_; }

private:
    AdmissibilityClause clause_;
    std::ptrdiff_t index_;
};

enum class CurveErrorKind {
    Syntax,
    DuplicateRoot,
    ExponentOutOfRange,
    DegenerateN,
    Reducible,
};

inline const char* to_string(CurveErrorKind k) {
    switch (k) {
        case CurveErrorKind::Syntax: return "SyntaxError";
        case CurveErrorKind::DuplicateRoot: return "DuplicateRoot";
        case CurveErrorKind::ExponentOutOfRange: return "ExponentOutOfRange";
        case CurveErrorKind::DegenerateN: return "DegenerateN";
        case CurveErrorKind::Reducible: return "Reducible";
    }
    return "?";
}

/// Error from the superelliptic curve front end.  `position()` is the
/// 0-based offset into the input text where the problem was detected
/// (npos when the error is not tied to a location), `index()` the
/// offending factor for ExponentOutOfRange.
class CurveError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    CurveError(CurveErrorKind kind, const std::string& msg,
               std::size_t position = npos, std::ptrdiff_t index = -1)
        : Error(std::string(to_string(kind)) + ": " + msg),
          kind_(kind),
          position_(position),
          index_(index) {}

    CurveErrorKind kind() const { return kind_; }
    std::size_t position() const { return position_; }
    std::ptrdiff_t index() const { return index_; }

private:
    CurveErrorKind kind_;
    std::size_t position_;
    std::ptrdiff_t index_;
};

}  // namespace branchlift
