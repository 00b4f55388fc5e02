#pragma once

#include <stdexcept>
#include <string>

namespace mixedsearch {

// Malformed or out-of-contract input (unknown vertex, invalid structure, ...).
// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a documented size guard of a brute-force routine.
// The CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A strategy emitted an illegal move or an edge outside the fugitive space
// during a match; the message names the offending side and emission.
class StrategyFault : public std::runtime_error {
public:
    explicit StrategyFault(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mixedsearch
