#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toriq {

// Malformed files, bad dimensions in user data, usage problems. CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated mathematical invariants or preconditions (degenerate form, non-Delzant
// polytope, integrality failure, ...). CLI exit code 1. `kind` is a stable tag.
struct math_error : std::runtime_error {
    std::string kind;
    math_error(std::string k, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(k)) {}
};

}  // namespace toriq
