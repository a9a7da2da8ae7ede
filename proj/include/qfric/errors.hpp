#pragma once

#include <stdexcept>
#include <string>

namespace qfric {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation exactly on a pole or integrable singularity of an integrand.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formulation/sector pairing for which no force expression exists.
class UnsupportedCombination : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Ratio of two forces requested where the denominator vanishes.
class IndeterminateRatio : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qfric
