#pragma once

#include <stdexcept>
#include <string>

namespace pdg {

// Precondition violated by the caller (bad n, k, vertex, divisibility chain...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An oracle or brute-force routine refused to run because the input exceeds
// its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A closed-form identity failed to hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pdg
