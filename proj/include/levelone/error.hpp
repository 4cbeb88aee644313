#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace levelone {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed pattern text. position is a byte offset into the input.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

  // A construction would exceed its configured state or element cap.
  class BudgetError : public Error {
   public:
    using Error::Error;
  };

  class AlphabetMismatch : public Error {
   public:
    using Error::Error;
  };

  class UnknownSymbol : public Error {
   public:
    explicit UnknownSymbol(char c)
        : Error(std::string("symbol '") + c + "' is not in the alphabet") {}
  };

  // Structurally invalid input data (DFA tables, group tables, manifests).
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside its documented domain.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Unsupported basis/level combination or bad command line.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

}  // namespace levelone
