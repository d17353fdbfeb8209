#pragma once

#include <stdexcept>
#include <string>

namespace ctqw {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input errors.
class IndexOutOfRange : public Error { public: using Error::Error; };
class SelfLoop        : public Error { public: using Error::Error; };
class InvalidSize     : public Error { public: using Error::Error; };
class NotUnit         : public Error { public: using Error::Error; };
class TooLarge        : public Error { public: using Error::Error; };

class ParseError : public Error {
public:
  ParseError(int line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

// Numerical / consistency errors.
class DimensionMismatch   : public Error { public: using Error::Error; };
class PoleAtAtom          : public Error { public: using Error::Error; };
class NotAnAtom           : public Error { public: using Error::Error; };
class MismatchedReference : public Error { public: using Error::Error; };
class NumericalFailure    : public Error { public: using Error::Error; };

}  // namespace ctqw
