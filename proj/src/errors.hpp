#pragma once

#include <stdexcept>
#include <string>

namespace svcalc {

// Bad caller input: malformed text, ground-set mismatch, violated precondition.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A consistency guarantee of the library itself failed.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace svcalc
