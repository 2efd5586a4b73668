#pragma once

#include <stdexcept>
#include <string>

namespace homcsa {

// Raised for malformed or shape-inconsistent user input. The CLI maps it to
// exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homcsa
