// types.hpp -- shared scalar types and error categories
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cfs {

using State = uint32_t;
using Symbol = uint32_t;

// Symbol code 0 is the reserved start marker '#'; it is the minimum of the
// alphabet order. All other codes are dense in 1..sigma-1.
inline constexpr Symbol kStartSymbol = 0;

inline constexpr State kNoState = std::numeric_limits<State>::max();

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cfs
