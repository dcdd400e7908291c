#ifndef DYCK_WORD_HPP
#define DYCK_WORD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/alphabet.hpp"

namespace dyck {

// An element of the free monoid over a paired alphabet: a finite letter
// sequence.  The empty word is the monoid identity.  Words are plain
// values; validity against a particular alphabet is checked at the
// boundaries (parsing, quotient evaluation).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  void assign(const std::vector<Letter>& letters) { letters_ = letters; }
  void append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }
  void reserve(std::size_t n) { letters_.reserve(n); }
  void clear() { letters_.clear(); }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  // Lexicographic order on letter values; used for enumeration and
  // tie-breaking.
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);

// Maximum number of words an enumeration is allowed to touch.
inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// Parses non-whitespace symbols of `text` into letters, in order.
// Throws UnknownSymbolError (with the byte position in `text`) for any
// symbol outside the display map, and Error if the mode cannot display
// the alphabet at all.
Word parse_word(std::string_view text, const PairedAlphabet& alphabet, DisplayMode mode);

// Inverse of parse_word on valid words; deterministic, no separators.
std::string format_word(const Word& w, const PairedAlphabet& alphabet, DisplayMode mode);

// (2n)^length if it is representable and within `cap`, otherwise nullopt.
std::optional<std::uint64_t> count_all_words(const PairedAlphabet& alphabet,
                                             std::size_t length, std::uint64_t cap);

// Streams all (2n)^length words of the given length exactly once, in
// lexicographic letter order.  The constructor throws ResourceBoundError
// when the count exceeds `cap`.
class WordEnumerator {
 public:
  WordEnumerator(const PairedAlphabet& alphabet, std::size_t length,
                 std::uint64_t cap = kDefaultEnumerationCap);

  // Assigns the next word to `out`; false when exhausted.
  bool next(Word& out);

 private:
  int letter_count_;
  std::vector<Letter> current_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace dyck

#endif
