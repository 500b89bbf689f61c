#pragma once

#include <stdexcept>
#include <string>

namespace cyclotome {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotATree : public Error {
 public:
  using Error::Error;
};

class NotSimplyLaced : public Error {
 public:
  using Error::Error;
};

class NotADE : public Error {
 public:
  using Error::Error;
};

// Raised by knitting when a window class has entries of both signs.
// Valid input never produces it.
class MixedSignClass : public Error {
 public:
  using Error::Error;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

class NotSupported : public Error {
 public:
  using Error::Error;
};

class NotInWPlus : public Error {
 public:
  using Error::Error;
};

class NotIndecomposable : public Error {
 public:
  using Error::Error;
};

class EnumerationMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeTooLarge : public Error {
 public:
  using Error::Error;
};

class NotAdjacentCaseMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclotome
