#pragma once

#include <stdexcept>
#include <string>

namespace weblog {

// Argument outside an operation's domain (bad status, zero hits, mixed itemset lengths).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Reading an input failed. Never raised for malformed log content.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A broken internal contract, e.g. a frequent itemset whose subset support is missing.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace weblog
