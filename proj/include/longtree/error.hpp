#pragma once

#include <stdexcept>
#include <string>

namespace longtree {

/// Malformed or inconsistent instance data (files, generator specs, trees).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact oracle refused an instance above its size guard.
class GuardError : public std::runtime_error {
 public:
  GuardError() : std::runtime_error("instance too large for oracle") {}
};

}  // namespace longtree
