#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspidal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something that violates a precondition or type invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A numeric procedure could not produce a trustworthy answer.
class NumericError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : InvalidInput(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class NotARoot : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class EqualModuli : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class MultiplicityTooSmall : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ModulusTooSmall : public NumericError {
 public:
  ModulusTooSmall(std::complex<double> where, double modulus, const std::string& what)
      : NumericError(what), where_(where), modulus_(modulus) {}

  std::complex<double> where() const { return where_; }
  double modulus() const { return modulus_; }

 private:
  std::complex<double> where_;
  double modulus_;
};

class NonConvergent : public NumericError {
 public:
  using NumericError::NumericError;
};

class BoundaryZero : public NumericError {
 public:
  using NumericError::NumericError;
};

class Diverged : public NumericError {
 public:
  using NumericError::NumericError;
};

class IndeterminateCluster : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace cuspidal
