#pragma once

#include <stdexcept>
#include <string>

namespace homhopf {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class BadRational : public Error {
 public:
  using Error::Error;
};

class NonInvertible : public Error {
 public:
  using Error::Error;
};

/// Shape or invertibility violation detected while building a structure.
class MalformedStructure : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class CharTwo : public Error {
 public:
  using Error::Error;
};

}  // namespace homhopf
