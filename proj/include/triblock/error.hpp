#pragma once

#include <stdexcept>
#include <string>

namespace triblock {

// Bad input from the caller: malformed documents, words, non-solutions.
class user_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A collection or block that fails one of its numerical invariants.
class validation_error : public user_error {
 public:
  using user_error::user_error;
};

// An internal arithmetic invariant failed. This is a bug, not bad input.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw invariant_violation(what);
}

}  // namespace triblock
