#pragma once

#include <stdexcept>
#include <string>

namespace cmprime {

/// Two independent computations of the same quantity disagreed, or a state
/// the mathematics rules out was reached. Never a property of the input.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

/// The caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cmprime
