#pragma once

#include <stdexcept>
#include <string>

namespace loopfloer {

/** Input that is well formed but outside the domain of an operation. */
class DomainError : public std::runtime_error {
public:
    DomainError(std::string reason, const std::string& message)
        : std::runtime_error(message), reason_(std::move(reason)) {}
    explicit DomainError(const std::string& message) : DomainError("domain", message) {}

    /** Short machine-readable tag, e.g. "not_simple". */
    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

/** Malformed loop, slope or tree text. */
class ParseError : public DomainError {
public:
    explicit ParseError(const std::string& message) : DomainError("parse_error", message) {}
    ParseError(std::string reason, const std::string& message)
        : DomainError(std::move(reason), message) {}
};

} // namespace loopfloer
