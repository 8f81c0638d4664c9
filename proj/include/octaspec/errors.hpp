#pragma once

#include <stdexcept>
#include <string>

namespace octaspec {

// A computation was refused because it would exceed a configured resource
// guard (enumeration ceiling, cycle cap, orbit size).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Fixed-width exact arithmetic left its representable range.
class ArithmeticOverflow : public std::overflow_error {
public:
    explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace octaspec
