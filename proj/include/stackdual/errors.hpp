#pragma once

#include <stdexcept>
#include <string>

namespace stackdual {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class Inhomogeneous : public Error {
 public:
  using Error::Error;
};

class NotModuleFinite : public Error {
 public:
  using Error::Error;
};

class NotRegularSequence : public Error {
 public:
  using Error::Error;
};

class IllDefinedMap : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when a configured term-count or wall-clock cap is hit.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace stackdual
