#pragma once

#include <stdexcept>
#include <string>

namespace toricinv {

struct ConeViolation : std::runtime_error {
    explicit ConeViolation(const std::string& what) : std::runtime_error(what) {}
};

struct DegeneratePolygon : std::runtime_error {
    explicit DegeneratePolygon(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateMoments : std::runtime_error {
    explicit DegenerateMoments(const std::string& what) : std::runtime_error(what) {}
};

struct PiGradeMismatch : std::runtime_error {
    explicit PiGradeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveSquare : std::runtime_error {
    explicit NonPositiveSquare(const std::string& what) : std::runtime_error(what) {}
};

struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

struct SameSignError : std::runtime_error {
    explicit SameSignError(const std::string& what) : std::runtime_error(what) {}
};

struct DenominatorVanishes : std::runtime_error {
    explicit DenominatorVanishes(const std::string& what) : std::runtime_error(what) {}
};

struct ToleranceTooSmall : std::runtime_error {
    explicit ToleranceTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct BracketFailure : std::runtime_error {
    explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

struct FixtureError : std::runtime_error {
    explicit FixtureError(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace toricinv
