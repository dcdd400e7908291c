#ifndef DYCK_ALPHABET_HPP
#define DYCK_ALPHABET_HPP

#include <cstdint>
#include <optional>

#include "dyck/errors.hpp"

namespace dyck {

// A letter of a paired alphabet, encoded as 2*pair for the opener and
// 2*pair+1 for the closer.  Letter values themselves do not depend on any
// particular alphabet; an alphabet only bounds which values are valid.
using Letter = std::uint8_t;

constexpr Letter opener_of_pair(int pair) { return static_cast<Letter>(2 * pair); }
constexpr Letter closer_of_pair(int pair) { return static_cast<Letter>(2 * pair + 1); }
constexpr int pair_of(Letter l) { return l >> 1; }
constexpr bool is_closer(Letter l) { return (l & 1) != 0; }
constexpr bool is_opener(Letter l) { return (l & 1) == 0; }

// The fixed-point-free involution pairing each opener with its closer.
// This is a formal tag, not a group inverse: both letters of a pair are
// independent generators everywhere except in the reduction rules.
constexpr Letter involution(Letter l) { return static_cast<Letter>(l ^ 1); }

enum class DisplayMode { letters, brackets };

// n pairs of letters, each pair an opener and a closer.  Letter display
// uses case pairs ('a'/'A', 'b'/'B', ...); bracket display maps pair 0 to
// "()", pair 1 to "[]", pair 2 to "{}" and is limited to three pairs.
class PairedAlphabet {
 public:
  static constexpr int kMaxPairs = 26;  // one case pair per Latin letter

  explicit PairedAlphabet(int pair_count) : pair_count_(pair_count) {
    if (pair_count < 1 || pair_count > kMaxPairs)
      throw Error("pair count must be between 1 and " + std::to_string(kMaxPairs));
  }

  int pair_count() const { return pair_count_; }
  int letter_count() const { return 2 * pair_count_; }

  bool contains(Letter l) const { return l < letter_count(); }

  // Printable symbol for a letter, or throws if the mode cannot display
  // this alphabet (brackets support at most 3 pairs).
  char symbol(Letter l, DisplayMode mode) const;

  // Reverse lookup; nullopt when the character is not in the display map.
  std::optional<Letter> letter_for(char c, DisplayMode mode) const;

  bool operator==(const PairedAlphabet&) const = default;

 private:
  int pair_count_;
};

}  // namespace dyck

#endif
