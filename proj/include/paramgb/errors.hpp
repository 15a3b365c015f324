#pragma once

#include <stdexcept>

namespace paramgb {

/// A mathematical precondition failed on otherwise well-formed input, e.g.
/// saturating by the zero polynomial or counting points of a
/// positive-dimensional ideal.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace paramgb
