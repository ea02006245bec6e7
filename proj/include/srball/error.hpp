#pragma once

#include <stdexcept>
#include <string>

namespace srball {

/// Raised for violated preconditions and failed invariants throughout the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace srball
