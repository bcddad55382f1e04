#pragma once

#include <stdexcept>
#include <string>

namespace lnli {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileNotFoundError : public Error {
 public:
  using Error::Error;
};

/// Malformed input record or config: missing field, duplicate id, bad shape.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A label string that does not normalize to one of the three classes.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// Two records share content but disagree on the label.
class ConflictError : public Error {
 public:
  using Error::Error;
};

class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class TemplateError : public Error {
 public:
  using Error::Error;
};

class BackendError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

class EmptyError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lnli
