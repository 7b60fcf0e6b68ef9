#pragma once

#include <stdexcept>
#include <string>

namespace biphoton {

// Bad physical input: wavelength outside a Sellmeier window, tau_o == tau_e, ...
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Bad configuration (CLI exit code 1).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An oracle self-check failed (CLI exit code 2).
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace biphoton
