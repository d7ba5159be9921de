#pragma once

#include <stdexcept>
#include <string>

namespace dualref {

// Raised when an operation would produce a word longer than the configured
// degree cap, or when a series is asked for a coefficient beyond its bound.
struct degree_cap_error : std::length_error {
  explicit degree_cap_error(const std::string& what) : std::length_error(what) {}
};

// Raised for malformed words, multi-indices, or indices outside the domain of
// an operation (e.g. dualizing a non-admissible index).
struct index_error : std::invalid_argument {
  explicit index_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a numeric routine cannot certify its requested error target.
struct precision_error : std::runtime_error {
  explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised for arguments outside a routine's analytic domain (z not in (0,1),
// non-admissible index passed to the zeta oracle, s < 2, ...).
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Raised when a rational cannot be reduced at the requested prime (prime in
// the denominator) or a p-adic context is inconsistent.
struct padic_error : std::runtime_error {
  explicit padic_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dualref
