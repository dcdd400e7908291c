#ifndef DYCK_ORACLE_HPP
#define DYCK_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyck/quotient.hpp"
#include "dyck/recognizer.hpp"

namespace dyck {

enum class LanguageKind { one_sided, two_sided };

struct CountRow {
  std::size_t length;
  std::uint64_t members;
  bool operator==(const CountRow&) const = default;
};

// Exact member counts per even length, produced by exhaustive enumeration.
struct CountTable {
  LanguageKind kind;
  int pair_count;
  std::vector<CountRow> rows;
};

// Enumerates all words of each even length 2..max_length and counts the
// members.  Throws ResourceBoundError when the enumeration would exceed
// the cap.
CountTable count_members(const PairedAlphabet& alphabet, LanguageKind kind,
                         std::size_t max_length,
                         std::uint64_t cap = kDefaultEnumerationCap);

// Independent counting routes, used to cross-check enumeration results.
std::uint64_t catalan_number(std::size_t k);
// C_k * n^k: one-sided members of length 2k over n pairs.
std::uint64_t one_sided_closed_form(int pair_count, std::size_t length);
// Closed walks of the given length from the origin of the 2n-regular tree
// (the Cayley graph of the rank-n free group): two-sided members.
std::uint64_t tree_walk_count(int pair_count, std::size_t length);

std::string format_count_table(const CountTable& table);  // aligned text
std::string count_table_csv(const CountTable& table);     // "length,members" rows

// Calls fn(word) for every one-sided word of exactly `length` letters,
// in lexicographic order.
template <typename Fn>
void for_each_one_sided(const PairedAlphabet& alphabet, std::size_t length, Fn&& fn) {
  if (length % 2 != 0) return;
  const int pairs = alphabet.pair_count();
  Word current;
  current.reserve(length);
  std::vector<int> open_stack;
  open_stack.reserve(length / 2);
  auto rec = [&](auto&& self) -> void {
    if (current.size() == length) {
      fn(std::as_const(current));
      return;
    }
    const std::size_t remaining = length - current.size();
    for (Letter l = 0; l < 2 * pairs; ++l) {
      if (is_opener(l)) {
        // every open bracket still needs a matching close
        if (open_stack.size() + 1 > remaining - 1) continue;
        open_stack.push_back(pair_of(l));
        current.push_back(l);
        self(self);
        current.pop_back();
        open_stack.pop_back();
      } else {
        if (open_stack.empty() || open_stack.back() != pair_of(l)) continue;
        const int saved = open_stack.back();
        open_stack.pop_back();
        current.push_back(l);
        self(self);
        current.pop_back();
        open_stack.push_back(saved);
      }
    }
  };
  rec(rec);
}

// Shortest one-sided word whose evaluation equals that of w, searching
// lengths 0, 2, 4, ... up to max_length in lexicographic order within
// each length; nullopt only if the bound is exhausted.  Throws
// NotTwoSidedError when w is not a member.
std::optional<Word> bfs_minimal_witness(const FiniteQuotient& q, const Word& w,
                                        std::size_t max_length);

struct EquivalenceReport {
  bool passed = false;
  std::uint64_t words_checked = 0;
  std::optional<Word> first_discrepancy;
};

// Checks, for every word of length <= max_length, that the two-sided
// recognizer and the kernel test agree.  Two independent code paths: one
// reduces letters, the other reduces signed generators.
EquivalenceReport exhaustive_equivalence(const PairedAlphabet& alphabet,
                                         std::size_t max_length,
                                         std::uint64_t cap = kDefaultEnumerationCap);

struct NamedQuotient {
  std::string name;
  FiniteQuotient quotient;
};

// The fixed verification suite: the trivial quotient, the mod-2 quotient
// (every letter a transposition of two points), the cyclic-3 quotient
// (pair-0 letters a 3-cycle, pair-1 letters the identity), and twenty
// seeded random quotients of degree 2..5.
std::vector<NamedQuotient> standard_suite(const PairedAlphabet& alphabet);

}  // namespace dyck

#endif
