#pragma once

#include <stdexcept>
#include <string>

namespace qfock {

/// Precondition on a mathematical argument was violated (negative exponent of
/// zero, negative q-integer, non-bijective permutation, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An infinite product was requested outside its convergence region.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested method cannot handle the input size (e.g. permutation sums
/// above the degree cap).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vector would leave the truncated Fock space.
class CapacityError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The Radulescu catalog failed to be a basis at some degree.
class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qfock
