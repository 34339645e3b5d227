#pragma once

#include <stdexcept>
#include <string>

namespace ratcat {

// Caller passed arguments outside an operation's domain (non-coprime frame,
// k > n, malformed word, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An internal post-condition failed: a claimed mathematical fact did not hold
// on a computed object (sweep output not Dyck, negative Schur coefficient,
// inexact division). Never recoverable.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace ratcat
