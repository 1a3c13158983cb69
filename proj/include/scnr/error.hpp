#pragma once

#include <stdexcept>
#include <string>

namespace scnr {

/// Malformed or out-of-contract input (bad arcs, bad parameters, bad files).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request exceeds what the exact engine is allowed to enumerate.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace scnr
