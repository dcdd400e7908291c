#include <set>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace dyck;
using dyck_test::w2;

TEST_CASE("catalan numbers and closed forms") {
  CHECK(catalan_number(0) == 1);
  CHECK(catalan_number(1) == 1);
  CHECK(catalan_number(2) == 2);
  CHECK(catalan_number(3) == 5);
  CHECK(catalan_number(10) == 16796);

  CHECK(one_sided_closed_form(2, 2) == 2);
  CHECK(one_sided_closed_form(2, 4) == 8);
  CHECK(one_sided_closed_form(2, 6) == 40);
  CHECK(one_sided_closed_form(1, 4) == 2);
  CHECK(one_sided_closed_form(3, 4) == 18);
}

TEST_CASE("tree walk counts") {
  CHECK(tree_walk_count(2, 0) == 1);
  CHECK(tree_walk_count(2, 2) == 4);
  CHECK(tree_walk_count(2, 4) == 28);
  CHECK(tree_walk_count(2, 6) == 232);
  CHECK(tree_walk_count(2, 3) == 0);
  // one pair: central binomial coefficients
  CHECK(tree_walk_count(1, 2) == 2);
  CHECK(tree_walk_count(1, 4) == 6);
  CHECK(tree_walk_count(1, 6) == 20);
}

TEST_CASE("count_members matches both independent routes") {
  PairedAlphabet a2(2);
  const auto ones = count_members(a2, LanguageKind::one_sided, 6);
  REQUIRE(ones.rows.size() == 3);
  CHECK(ones.rows[0] == CountRow{2, 2});
  CHECK(ones.rows[1] == CountRow{4, 8});
  CHECK(ones.rows[2] == CountRow{6, 40});
  for (const auto& row : ones.rows)
    CHECK(row.members == one_sided_closed_form(2, row.length));

  const auto twos = count_members(a2, LanguageKind::two_sided, 6);
  CHECK(twos.rows[0] == CountRow{2, 4});
  CHECK(twos.rows[1] == CountRow{4, 28});
  CHECK(twos.rows[2] == CountRow{6, 232});
  for (const auto& row : twos.rows)
    CHECK(row.members == tree_walk_count(2, row.length));

  PairedAlphabet a1(1);
  const auto narrow = count_members(a1, LanguageKind::two_sided, 4);
  CHECK(narrow.rows[0] == CountRow{2, 2});
  CHECK(narrow.rows[1] == CountRow{4, 6});

  CHECK_THROWS_AS(count_members(a2, LanguageKind::one_sided, 30, 1000),
                  ResourceBoundError);
}

TEST_CASE("count table rendering") {
  const CountTable table{LanguageKind::one_sided, 2, {{2, 2}, {4, 8}}};
  const auto text = format_count_table(table);
  CHECK(text.find("one_sided members, 2 pairs") != std::string::npos);
  CHECK(text.find("2") != std::string::npos);
  CHECK(count_table_csv(table) ==
        "kind,pairs,length,members\none_sided,2,2,2\none_sided,2,4,8\n");
}

TEST_CASE("one-sided generation agrees with enumeration filtering") {
  PairedAlphabet a2(2);
  for (std::size_t len = 0; len <= 8; len += 2) {
    std::vector<Word> generated;
    for_each_one_sided(a2, len, [&](const Word& u) { generated.push_back(u); });

    std::vector<Word> filtered;
    WordEnumerator en(a2, len);
    Word buf;
    while (en.next(buf))
      if (is_one_sided_quick(buf)) filtered.push_back(buf);

    CHECK(generated == filtered);  // same words, same lexicographic order
    CHECK(generated.size() == one_sided_closed_form(2, len));
  }
}

TEST_CASE("bfs_minimal_witness") {
  PairedAlphabet a2(2);
  const auto trivial = trivial_quotient(a2);
  const auto witness = bfs_minimal_witness(trivial, w2("Aa"), 8);
  REQUIRE(witness.has_value());
  CHECK(witness->empty());

  std::vector<Permutation> mod2_images(4, Permutation::from_images({1, 0}));
  const FiniteQuotient mod2(a2, std::move(mod2_images));
  const auto mod2_witness = bfs_minimal_witness(mod2, w2("Aa"), 8);
  REQUIRE(mod2_witness.has_value());
  CHECK(mod2_witness->empty());

  std::vector<Permutation> c3_images(4, Permutation::identity(3));
  c3_images[0] = Permutation::from_images({1, 2, 0});
  c3_images[1] = Permutation::from_images({1, 2, 0});
  const FiniteQuotient cyclic3(a2, std::move(c3_images));
  const auto c3_witness = bfs_minimal_witness(cyclic3, w2("Aa"), 8);
  REQUIRE(c3_witness.has_value());
  CHECK(c3_witness->size() <= 8);
  CHECK(verify_approximation(cyclic3, w2("Aa"), *c3_witness).passed());
  // "aA" already evaluates to the same 3-cycle square
  CHECK(dyck_test::fmt2(*c3_witness) == "aA");

  CHECK_THROWS_AS(bfs_minimal_witness(trivial, w2("a"), 4), NotTwoSidedError);

  // unreachable target within the bound
  const auto none = bfs_minimal_witness(cyclic3, w2("Aa"), 0);
  CHECK_FALSE(none.has_value());
}

TEST_CASE("bfs witness never longer than the constructed one") {
  PairedAlphabet a2(2);
  std::mt19937 rng(5);
  const auto suite = standard_suite(a2);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    const auto& named = suite[rng() % suite.size()];
    const Word member = dyck_test::random_member(rng, 2, 1 + rng() % 3);
    const Word constructed = approximate(named.quotient, member);
    if (constructed.size() > 12) continue;  // keep the search space small
    const auto minimal =
        bfs_minimal_witness(named.quotient, member, constructed.size());
    ++checked;
    REQUIRE(minimal.has_value());
    CHECK(minimal->size() <= constructed.size());
    CHECK(verify_approximation(named.quotient, member, *minimal).passed());
  }
  CHECK(checked == 25);
}

TEST_CASE("exhaustive equivalence") {
  PairedAlphabet a2(2);
  const auto report = exhaustive_equivalence(a2, 6);
  CHECK(report.passed);
  CHECK(report.words_checked == 1 + 4 + 16 + 64 + 256 + 1024 + 4096);
  CHECK_FALSE(report.first_discrepancy.has_value());

  const auto odd = exhaustive_equivalence(a2, 3);
  CHECK(odd.passed);

  PairedAlphabet a1(1);
  const auto narrow = exhaustive_equivalence(a1, 4);
  CHECK(narrow.passed);

  CHECK_THROWS_AS(exhaustive_equivalence(a2, 30), ResourceBoundError);
}

TEST_CASE("standard suite composition") {
  PairedAlphabet a2(2);
  const auto suite = standard_suite(a2);
  REQUIRE(suite.size() == 23);
  CHECK(suite[0].name == "trivial");
  CHECK(suite[0].quotient.degree() == 1);
  CHECK(suite[1].name == "mod-2");
  CHECK(suite[2].name == "cyclic-3");
  for (std::size_t i = 3; i < suite.size(); ++i) {
    CHECK(suite[i].quotient.degree() >= 2);
    CHECK(suite[i].quotient.degree() <= 5);
  }
  // deterministic across calls
  const auto again = standard_suite(a2);
  for (std::size_t i = 0; i < suite.size(); ++i)
    CHECK(suite[i].quotient == again[i].quotient);
}
