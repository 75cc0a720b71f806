#pragma once

#include <stdexcept>
#include <string>

namespace specord {

// Base for everything this library throws on purpose.  The CLI maps the
// subtypes onto exit codes: input/validation problems -> 2, numeric failures
// -> 3, scale limits -> 4.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- input / validation --------------------------------------------------

struct DimMismatch : Error {
    explicit DimMismatch(const std::string& what) : Error(what) {}
};

struct InvalidProjection : Error {
    explicit InvalidProjection(const std::string& what) : Error(what) {}
};

struct InvalidFamily : Error {
    explicit InvalidFamily(const std::string& what) : Error(what) {}
};

struct NotMonotone : Error {
    explicit NotMonotone(const std::string& what) : Error(what) {}
};

struct NotInContext : Error {
    explicit NotInContext(const std::string& what) : Error(what) {}
};

// A finite poset handed to an adjoint computation is not a complete lattice.
struct NotComplete : Error {
    explicit NotComplete(const std::string& what) : Error(what) {}
};

// Sampled function data fails one of the defining conditions of an abstract
// q-observable function: (a) finite off the bottom, (b) finite at the top,
// or preservation of joins on the sample.
struct NotAbstractQObservable : Error {
    enum class Condition { ConditionA, ConditionB, JoinPreservation };
    Condition condition;
    NotAbstractQObservable(Condition c, const std::string& what)
        : Error(what), condition(c) {}
};

// ---- numeric -------------------------------------------------------------

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& what) : Error(what) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

struct NotPSD : Error {
    explicit NotPSD(const std::string& what) : Error(what) {}
};

struct NonFiniteValue : Error {
    explicit NonFiniteValue(const std::string& what) : Error(what) {}
};

// A post-condition the library guarantees internally failed to hold
// numerically (e.g. a pointwise join family stopped being monotone).
struct InternalInvariantViolation : Error {
    explicit InternalInvariantViolation(const std::string& what) : Error(what) {}
};

// ---- scale ---------------------------------------------------------------

struct TooManyAtoms : Error {
    explicit TooManyAtoms(const std::string& what) : Error(what) {}
};

}  // namespace specord
