#pragma once

#include <stdexcept>
#include <string>

namespace pisot {

// Base of every error raised by the library. Messages name the violated
// precondition so the CLI can print them verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class AlphabetTooSmall : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class IterationCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotThreeGapStructure : public Error {
 public:
  using Error::Error;
};

class BadGapData : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace pisot
