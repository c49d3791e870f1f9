#pragma once

#include <stdexcept>

namespace qwords {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, word or automaton text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two operands built over different alphabets, or a symbol outside the alphabet.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwords
