#pragma once

#include <stdexcept>
#include <string>

namespace ferrers {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad partition text, non-bijective permutation, wrong ground set.
class ValidationError : public Error {
public:
    using Error::Error;
};

// zetaEncode was handed a filling that is not complete and lonesum.
class NotCompleteLonesum : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// An exhaustive operation was asked to exceed its size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// Two independent counting routes disagreed. Always an implementation bug.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace ferrers
