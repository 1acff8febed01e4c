#pragma once

#include <stdexcept>
#include <string>

namespace hhineq {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An integrand or test function produced a non-finite sample.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double point)
        : std::runtime_error(what), point_(point) {}

    double point() const noexcept { return point_; }

private:
    double point_;
};

/// The open quadrature rule detected a non-integrable endpoint singularity.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, double endpoint)
        : std::runtime_error(what), endpoint_(endpoint) {}

    double endpoint() const noexcept { return endpoint_; }

private:
    double endpoint_;
};

/// A FunctionSpec lacks an oracle the operation needs (e.g. f'').
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A custom weight h returned a negative value.
class InvalidHError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// h(1/2) == 0, so 1/(2h(1/2)) is undefined.
class DegenerateHError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The function under test violates a hypothesis (e.g. negative where
/// non-negativity is required).
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& what, double point)
        : std::runtime_error(what), point_(point) {}

    double point() const noexcept { return point_; }

private:
    double point_;
};

/// A compiled-in class claim failed re-validation at suite start.
class CorpusIntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed suite configuration or CLI usage.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hhineq
