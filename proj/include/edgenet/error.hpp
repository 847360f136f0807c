#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgenet {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (invalid parameters, k < 1, ...).
struct DomainError : Error {
  using Error::Error;
};

// Input data that cannot be turned into a well-formed graph.
struct DataError : Error {
  using Error::Error;
};

// Numerical failure: no bracket, non-finite value, estimator out of range.
struct NumericError : Error {
  using Error::Error;
};

struct RangeError : DomainError {
  using DomainError::DomainError;
};

struct ParseError : DataError {
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct EmptyInputError : DataError {
  using DataError::DataError;
};

struct MalformedGraphError : DataError {
  using DataError::DataError;
};

struct ReplayError : DataError {
  using DataError::DataError;
};

struct IoError : DataError {
  using DataError::DataError;
};

struct InvalidInputError : DataError {
  using DataError::DataError;
};

struct BracketError : NumericError {
  using NumericError::NumericError;
};

struct NonFiniteError : NumericError {
  using NumericError::NumericError;
};

struct UnattainableTargetError : NumericError {
  using NumericError::NumericError;
};

struct InsufficientDataError : NumericError {
  using NumericError::NumericError;
};

struct DivergentEstimateError : NumericError {
  using NumericError::NumericError;
};

struct ExponentOutOfRangeError : NumericError {
  using NumericError::NumericError;
};

}  // namespace edgenet
