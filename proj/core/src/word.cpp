#include "dyck/word.hpp"

#include <cctype>

namespace dyck {

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.append(v);
  return r;
}

Word parse_word(std::string_view text, const PairedAlphabet& alphabet, DisplayMode mode) {
  if (mode == DisplayMode::brackets && alphabet.pair_count() > 3)
    throw Error("bracket display supports at most 3 pairs");
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const auto letter = alphabet.letter_for(c, mode);
    if (!letter) throw UnknownSymbolError(i, c);
    w.push_back(*letter);
  }
  return w;
}

std::string format_word(const Word& w, const PairedAlphabet& alphabet, DisplayMode mode) {
  std::string out;
  out.reserve(w.size());
  for (const Letter l : w) out.push_back(alphabet.symbol(l, mode));
  return out;
}

std::optional<std::uint64_t> count_all_words(const PairedAlphabet& alphabet,
                                             std::size_t length, std::uint64_t cap) {
  const std::uint64_t base = static_cast<std::uint64_t>(alphabet.letter_count());
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (count > cap / base) return std::nullopt;
    count *= base;
  }
  if (count > cap) return std::nullopt;
  return count;
}

WordEnumerator::WordEnumerator(const PairedAlphabet& alphabet, std::size_t length,
                               std::uint64_t cap)
    : letter_count_(alphabet.letter_count()), current_(length, 0) {
  if (!count_all_words(alphabet, length, cap))
    throw ResourceBoundError("enumeration of length-" + std::to_string(length) +
                             " words exceeds the cap of " + std::to_string(cap));
}

bool WordEnumerator::next(Word& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    out.assign(current_);
    return true;
  }
  // odometer increment, least significant position last
  std::size_t i = current_.size();
  while (i > 0) {
    --i;
    if (current_[i] + 1 < letter_count_) {
      ++current_[i];
      out.assign(current_);
      return true;
    }
    current_[i] = 0;
  }
  done_ = true;
  return false;
}

}  // namespace dyck
