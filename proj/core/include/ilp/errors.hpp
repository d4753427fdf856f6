#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ilp {

/// Malformed input: bad rational syntax, reversed interval bounds,
/// dimension mismatches in files, unknown enum strings.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
    ParseError(const std::string& what, const std::string& where)
        : std::runtime_error(where + ": " + what) {}
};

/// An enumeration would exceed the caller-provided scenario cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::uint64_t required, std::uint64_t cap)
        : std::runtime_error("endpoint enumeration needs " + std::to_string(required) +
                             " scenarios, cap is " + std::to_string(cap)),
          required_(required), cap_(cap) {}
    std::uint64_t required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

/// A query whose exact answer is out of reach for the implemented
/// decision procedures (e.g. worst-bound formula without established
/// finiteness).
class Undecided : public std::runtime_error {
public:
    explicit Undecided(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-checked mathematical property failed to hold. Carries enough
/// text to reproduce; raised e.g. when the two value-range routes disagree.
class PropertyViolation : public std::runtime_error {
public:
    explicit PropertyViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ilp
