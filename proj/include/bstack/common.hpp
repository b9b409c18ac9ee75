#ifndef BSTACK_COMMON_HPP_
#define BSTACK_COMMON_HPP_

#include <stdexcept>
#include <string>

namespace bstack {

// Base class for everything this library throws.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by zero and friends.
struct ArithmeticError : Error {
  explicit ArithmeticError(const std::string& msg) : Error(msg) {}
};

// Malformed or inconsistent input (bad JSON, dimension mismatch, ...).
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace bstack

#endif
