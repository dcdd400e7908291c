#include <set>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace dyck;
using dyck_test::w2;

TEST_CASE("letter encoding basics") {
  CHECK(opener_of_pair(0) == 0);
  CHECK(closer_of_pair(0) == 1);
  CHECK(involution(opener_of_pair(1)) == closer_of_pair(1));
  CHECK(involution(involution(opener_of_pair(2))) == opener_of_pair(2));
  CHECK(pair_of(closer_of_pair(3)) == 3);
  CHECK(is_closer(closer_of_pair(0)));
  CHECK(is_opener(opener_of_pair(5)));
}

TEST_CASE("alphabet display maps") {
  PairedAlphabet a2(2);
  CHECK(a2.symbol(opener_of_pair(0), DisplayMode::letters) == 'a');
  CHECK(a2.symbol(closer_of_pair(0), DisplayMode::letters) == 'A');
  CHECK(a2.symbol(opener_of_pair(1), DisplayMode::brackets) == '[');
  CHECK(a2.letter_for('B', DisplayMode::letters) == closer_of_pair(1));
  CHECK(a2.letter_for('c', DisplayMode::letters) == std::nullopt);
  CHECK(a2.letter_for('{', DisplayMode::brackets) == std::nullopt);  // pair 2 absent

  PairedAlphabet a3(3);
  CHECK(a3.letter_for('{', DisplayMode::brackets) == opener_of_pair(2));
  CHECK_THROWS_AS(PairedAlphabet(0), Error);
  CHECK_THROWS_AS(PairedAlphabet(27), Error);
  CHECK_THROWS_AS(PairedAlphabet(4).symbol(0, DisplayMode::brackets), Error);
}

TEST_CASE("parse_word basics") {
  const Word w = w2("aA");
  REQUIRE(w.size() == 2);
  CHECK(w[0] == opener_of_pair(0));
  CHECK(w[1] == closer_of_pair(0));

  const Word b = dyck_test::wb("([()()]{}[])()", 3);
  CHECK(b.size() == 14);

  CHECK(w2("").empty());
  CHECK(w2("a A\tb\nB").size() == 4);  // whitespace ignored
}

TEST_CASE("parse_word errors") {
  PairedAlphabet a2(2);
  try {
    parse_word("c", a2, DisplayMode::letters);
    FAIL("expected UnknownSymbolError");
  } catch (const UnknownSymbolError& e) {
    CHECK(e.position == 0);
  }
  try {
    parse_word("a c", a2, DisplayMode::letters);
    FAIL("expected UnknownSymbolError");
  } catch (const UnknownSymbolError& e) {
    CHECK(e.position == 2);
  }
  CHECK_THROWS_AS(parse_word("(", PairedAlphabet(4), DisplayMode::brackets), Error);
}

TEST_CASE("format_word basics") {
  PairedAlphabet a2(2);
  CHECK(format_word(Word{}, a2, DisplayMode::letters) == "");
  CHECK(format_word(w2("aA"), a2, DisplayMode::letters) == "aA");
  Word closing;
  closing.push_back(closer_of_pair(0));
  closing.push_back(opener_of_pair(0));
  CHECK(format_word(closing, a2, DisplayMode::brackets) == ")(");
}

TEST_CASE("parse/format round-trip property") {
  std::mt19937 rng(20260809);
  for (int pairs : {1, 2, 3}) {
    PairedAlphabet alphabet(pairs);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t len = rng() % 13;
      Word w;
      for (std::size_t i = 0; i < len; ++i)
        w.push_back(static_cast<Letter>(rng() % (2 * pairs)));
      for (DisplayMode mode : {DisplayMode::letters, DisplayMode::brackets}) {
        const std::string text = format_word(w, alphabet, mode);
        CHECK(parse_word(text, alphabet, mode) == w);
      }
    }
  }
}

TEST_CASE("enumeration counts and order") {
  PairedAlphabet a2(2);
  WordEnumerator en0(a2, 0);
  Word buf;
  int count = 0;
  while (en0.next(buf)) ++count;
  CHECK(count == 1);

  WordEnumerator en2(a2, 2);
  count = 0;
  while (en2.next(buf)) ++count;
  CHECK(count == 16);

  PairedAlphabet a1(1);
  WordEnumerator en3(a1, 3);
  REQUIRE(en3.next(buf));
  CHECK(dyck_test::fmt2(buf, 1) == "aaa");
  count = 1;
  while (en3.next(buf)) ++count;
  CHECK(count == 8);
}

TEST_CASE("enumeration is duplicate-free and complete") {
  // lexicographic order makes strict increase equivalent to no duplicates
  for (int pairs : {1, 2, 3}) {
    PairedAlphabet alphabet(pairs);
    for (std::size_t len = 0; len <= 8; ++len) {
      const auto expected = count_all_words(alphabet, len, kDefaultEnumerationCap);
      REQUIRE(expected.has_value());
      WordEnumerator en(alphabet, len);
      Word buf, prev;
      std::uint64_t count = 0;
      while (en.next(buf)) {
        if (count > 0) CHECK(prev < buf);
        prev = buf;
        ++count;
      }
      CHECK(count == *expected);
    }
  }
}

TEST_CASE("enumeration cap") {
  PairedAlphabet a2(2);
  CHECK_THROWS_AS(WordEnumerator(a2, 5, 100), ResourceBoundError);  // 4^5 > 100
  CHECK(count_all_words(a2, 5, 100) == std::nullopt);
  CHECK(count_all_words(a2, 5, 2000) == 1024);
}
