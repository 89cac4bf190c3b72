#pragma once

#include <stdexcept>
#include <string>

namespace nfct {

/// Base of everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (CLI exit code 1).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Inconsistent problem data (CLI exit code 2).
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Generator closure exceeded the cap: the group is (or looks) infinite.
struct NotFinite : ValidationError {
    explicit NotFinite(const std::string& what) : ValidationError(what) {}
};

/// The same matrix was reached with conflicting signs while closing a group.
struct SigmaInconsistent : ValidationError {
    explicit SigmaInconsistent(const std::string& what) : ValidationError(what) {}
};

/// A group generator is singular.
struct NotInvertible : ValidationError {
    explicit NotInvertible(const std::string& what) : ValidationError(what) {}
};

/// The linear part fails L rho(gamma) = rho_sigma(gamma) L for some gamma.
struct LinearPartNotReversible : ValidationError {
    explicit LinearPartNotReversible(const std::string& what) : ValidationError(what) {}
};

/// Some graded part of a jet fails the reversible-equivariance membership test.
struct JetNotReversible : ValidationError {
    explicit JetNotReversible(const std::string& what) : ValidationError(what) {}
};

/// A field handed to the reversible-equivariant splitter is not in Q^k(Gamma).
struct NotInTargetSlice : ValidationError {
    explicit NotInTargetSlice(const std::string& what) : ValidationError(what) {}
};

/// A germ with a nonzero constant part was supplied; everything here assumes h(0) = 0.
struct NonzeroConstant : ValidationError {
    explicit NonzeroConstant(const std::string& what) : ValidationError(what) {}
};

/// Degree outside the range an operation supports.
struct DegreeError : ValidationError {
    explicit DegreeError(const std::string& what) : ValidationError(what) {}
};

/// Misuse of the library or a violated internal invariant (CLI exit code 3).
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

struct AmbientMismatch : InternalError {
    explicit AmbientMismatch(const std::string& what) : InternalError(what) {}
};

struct SliceMismatch : InternalError {
    explicit SliceMismatch(const std::string& what) : InternalError(what) {}
};

struct DimensionMismatch : InternalError {
    explicit DimensionMismatch(const std::string& what) : InternalError(what) {}
};

struct SingularMatrix : InternalError {
    explicit SingularMatrix(const std::string& what) : InternalError(what) {}
};

struct DivisionByZero : InternalError {
    explicit DivisionByZero(const std::string& what) : InternalError(what) {}
};

/// Group-averaged trace came out non-integral: mathematically impossible, so a bug.
struct NonIntegerTrace : InternalError {
    explicit NonIntegerTrace(const std::string& what) : InternalError(what) {}
};

/// A theorem-guaranteed check failed.
struct InternalCheckFailure : InternalError {
    explicit InternalCheckFailure(const std::string& what) : InternalError(what) {}
};

} // namespace nfct
