#pragma once

#include <stdexcept>
#include <string>

namespace ultrazeta {

// Base of every error raised by the library. The CLI maps ValidationError to
// exit code 2 and every other Error to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class InexactError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class DivergentError : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class AmbiguousSolution : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NondegeneracyFailed : public Error {
 public:
  using Error::Error;
};

class PoleProximity : public Error {
 public:
  using Error::Error;
};

class PoleOfGamma : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void throw_validation(const std::string& what);

}  // namespace ultrazeta
