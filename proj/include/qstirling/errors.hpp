#pragma once

#include <stdexcept>
#include <string>

namespace qstirling {

/// Invalid or inconsistent input parameters.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (n < origin, T <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two inputs that must describe a consistent situation do not.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The thermal ensemble populates levels past the point where the perturbative
/// spectrum stops increasing.
class PerturbativeRegimeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure inside one stroke of a cycle; the message carries the stroke label.
class StrokeError : public std::runtime_error {
public:
    StrokeError(std::string stroke, const std::string& what)
        : std::runtime_error("stroke " + stroke + ": " + what), stroke_(std::move(stroke)) {}

    const std::string& stroke() const noexcept { return stroke_; }

private:
    std::string stroke_;
};

}  // namespace qstirling
