#pragma once

#include <stdexcept>
#include <string>

namespace brickplan {

// Malformed input text (OBJ records, JSON schemas). Carries a 1-based line
// number when one is known, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Inputs that parse but violate a contract (empty mesh, zero extent,
// inventory without a 1x1 kind, bad parameter values).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact solver refused the instance because it exceeds the occupied-cell cap.
class InstanceTooLarge : public std::runtime_error {
public:
    explicit InstanceTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace brickplan
