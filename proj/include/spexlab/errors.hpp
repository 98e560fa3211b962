#pragma once

#include <stdexcept>
#include <string>

namespace spexlab {

// Thrown when an input exceeds a documented search cap (cycle enumeration,
// minor search, full enumeration, ...).  The CLI maps this to exit code 3.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a search query is unsatisfiable (no free graph exists, or a
// restricted search's base graph already fails freeness).
class search_error : public std::runtime_error {
public:
    explicit search_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed expression / DSL / graph6 input.  Carries a 0-based
// position into the offending text where available.  CLI exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, size_t pos = std::string::npos)
        : std::runtime_error(pos == std::string::npos
                                 ? what
                                 : what + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

}  // namespace spexlab
