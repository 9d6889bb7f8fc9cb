#ifndef BICHEB_ERRORS_HPP
#define BICHEB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicheb {

// Caller broke a precondition that is independent of the numbers involved
// (order mismatch, wrong parameter slice, empty grid, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical input outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace bicheb

#endif  // BICHEB_ERRORS_HPP
