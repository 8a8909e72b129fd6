#pragma once

#include <stdexcept>
#include <string>

namespace monogenic {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operands built over different AlgebraContexts.
class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("operands belong to different Clifford algebras") {}
};

class NotMonogenic : public Error {
 public:
  using Error::Error;
};

class NonScalarInput : public Error {
 public:
  using Error::Error;
};

class NonVectorInput : public Error {
 public:
  using Error::Error;
};

class DependsOnX0 : public Error {
 public:
  DependsOnX0() : Error("polynomial depends on x_0") {}
};

class InvalidPk : public Error {
 public:
  using Error::Error;
};

class DimensionTooSmall : public Error {
 public:
  using Error::Error;
};

class NotAxialForm : public Error {
 public:
  using Error::Error;
};

class EvenDimension : public Error {
 public:
  explicit EvenDimension(unsigned m)
      : Error("Fueter map requires odd m, got m = " + std::to_string(m)) {}
};

class ArgumentTooSmall : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace monogenic
