#pragma once

#include <string>

#include <toriq/error.hpp>

inline std::string fx(const std::string& name) {
    return std::string(TORIQ_FIXTURES_DIR) + "/" + name;
}

// Runs f and reports the kind of the math_error it throws ("" if none).
template <class F>
std::string thrown_kind(F&& f) {
    try {
        f();
    } catch (const toriq::math_error& e) {
        return e.kind;
    }
    return "";
}
