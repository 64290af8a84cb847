#pragma once

#include <stdexcept>
#include <string>

namespace effbayes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByIntervalContainingZero : Error {
    DivisionByIntervalContainingZero() : Error("interval division: divisor contains zero") {}
};

struct SpaceMismatch : Error {
    explicit SpaceMismatch(const std::string& what) : Error("space mismatch: " + what) {}
};

struct UndecidableEvent : Error {
    explicit UndecidableEvent(const std::string& what) : Error("undecidable event: " + what) {}
};

struct ZeroMassParameter : Error {
    ZeroMassParameter() : Error("parameter has zero likelihood mass (support oracle says OUT)") {}
};

struct EmptyBox : Error {
    EmptyBox() : Error("coordinate box misses the simplex (lower bounds sum past 1)") {}
};

struct ExplosionGuard : Error {
    explicit ExplosionGuard(const std::string& what) : Error("combinatorial budget exceeded: " + what) {}
};

struct TooManyStrings : Error {
    explicit TooManyStrings(const std::string& what) : Error("too many reachable strings: " + what) {}
};

struct UndecidedMembership : Error {
    explicit UndecidedMembership(const std::string& what) : Error("membership not settled at allotted stage: " + what) {}
};

struct SeparationFailure : Error {
    explicit SeparationFailure(const std::string& what) : Error("separation certificate failed: " + what) {}
};

struct NotInteriorPoint : Error {
    NotInteriorPoint() : Error("positive atom must have every coordinate > 0") {}
};

struct BadZeroCoordinate : Error {
    explicit BadZeroCoordinate(const std::string& what) : Error("claimed zero coordinate is nonzero: " + what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config: " + what) {}
};

struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& what) : Error("invariant violation: " + what) {}
};

}  // namespace effbayes
