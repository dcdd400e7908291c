#ifndef DYCK_ERRORS_HPP
#define DYCK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyck {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A character of the input text is not in the display map.
struct UnknownSymbolError : Error {
  UnknownSymbolError(std::size_t pos, char symbol)
      : Error("unknown symbol '" + std::string(1, symbol) + "' at position " +
              std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

// An enumeration or exhaustive run would exceed the configured cap.
struct ResourceBoundError : Error {
  using Error::Error;
};

// The word does not reduce to the empty word, so it is not in the
// two-sided language; carries the irreducible residual.
struct NotTwoSidedError : Error {
  NotTwoSidedError(std::string msg, std::string residual_text)
      : Error(std::move(msg)), residual(std::move(residual_text)) {}
  std::string residual;
};

// Separation was requested for a word that is in the two-sided language;
// no finite quotient can separate it from the one-sided words.
struct NotSeparableError : Error {
  using Error::Error;
};

// The residual-witness construction needs a nonempty reduced word.
struct EmptyWordError : Error {
  using Error::Error;
};

// A self-check that must hold by construction failed.  Seeing this
// exception means the library itself is broken.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace dyck

#endif
