#include "dyck/alphabet.hpp"

namespace dyck {

namespace {
constexpr char kBracketSymbols[3][2] = {{'(', ')'}, {'[', ']'}, {'{', '}'}};
}

char PairedAlphabet::symbol(Letter l, DisplayMode mode) const {
  if (!contains(l)) throw Error("letter value outside alphabet");
  const int pair = pair_of(l);
  if (mode == DisplayMode::letters)
    return static_cast<char>((is_closer(l) ? 'A' : 'a') + pair);
  if (pair_count_ > 3) throw Error("bracket display supports at most 3 pairs");
  return kBracketSymbols[pair][is_closer(l) ? 1 : 0];
}

std::optional<Letter> PairedAlphabet::letter_for(char c, DisplayMode mode) const {
  if (mode == DisplayMode::letters) {
    if (c >= 'a' && c < 'a' + pair_count_) return opener_of_pair(c - 'a');
    if (c >= 'A' && c < 'A' + pair_count_) return closer_of_pair(c - 'A');
    return std::nullopt;
  }
  for (int pair = 0; pair < pair_count_ && pair < 3; ++pair) {
    if (c == kBracketSymbols[pair][0]) return opener_of_pair(pair);
    if (c == kBracketSymbols[pair][1]) return closer_of_pair(pair);
  }
  return std::nullopt;
}

}  // namespace dyck
