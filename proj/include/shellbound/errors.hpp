#pragma once

#include <stdexcept>
#include <string>

namespace shellbound {

// Malformed or unrecognised input (bad names, unparsable files, wrong shapes).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates a mathematical precondition
// (non positive definite Gram, dimension out of range, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace shellbound
