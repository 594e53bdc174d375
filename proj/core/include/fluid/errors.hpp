#pragma once

#include <stdexcept>
#include <string>

namespace fluid {

// Base for every recoverable data error raised by the library. The CLI maps
// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unrecoverable I/O failure while reading an input stream.
class StreamAborted : public Error {
 public:
  using Error::Error;
};

class UnknownPreset : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// Height 0 requested for a model that has neither a type set nor rdf:type
// objects to summarize by.
class InapplicableHeight : public Error {
 public:
  using Error::Error;
};

class MissingCliques : public Error {
 public:
  using Error::Error;
};

class EmptySources : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class EmptyIndex : public Error {
 public:
  using Error::Error;
};

class IncompatibleModel : public Error {
 public:
  using Error::Error;
};

class EmptyGold : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// A persisted artifact (index file, query file, report, snapshot) does not
// match its expected format.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace fluid
