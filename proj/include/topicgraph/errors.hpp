#pragma once

#include <stdexcept>
#include <string>

namespace topicgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (df = 0, b outside [-1, 1], ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Input data is unusable: duplicate document ids, empty corpus, malformed corpus file.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A persisted index could not be read back.
class IndexFormatError : public Error {
 public:
  using Error::Error;
};

class IndexVersionError : public IndexFormatError {
 public:
  using IndexFormatError::IndexFormatError;
};

class CorruptIndexError : public IndexFormatError {
 public:
  using IndexFormatError::IndexFormatError;
};

/// The index was built with a different tokenizer or stopword list than the one in use.
class StaleIndexError : public Error {
 public:
  using Error::Error;
};

/// A query or request parameter is out of its domain. Carries the parameter name.
class ParameterError : public Error {
 public:
  ParameterError(std::string parameter, const std::string& message)
      : Error(message), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

}  // namespace topicgraph
