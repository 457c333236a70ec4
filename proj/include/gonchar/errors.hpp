#ifndef GONCHAR_ERRORS_HPP
#define GONCHAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gonchar {

// Argument outside an operation's mathematical domain (d = 0, q <= 0, R <= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An operation's documented precondition does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A certified numerical procedure exhausted its precision ladder or iteration budget.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certified zero disk could not be placed inside a single region.
class UnresolvedClassification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gonchar

#endif  // GONCHAR_ERRORS_HPP
