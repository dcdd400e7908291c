#include <sstream>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace dyck;
using dyck_test::w2;

TEST_CASE("residual witness frozen examples") {
  // r = x: degree 2, x -> (0 1)
  const auto single = residual_witness(GroupWord::generator(0), 2);
  REQUIRE(single.size() == 2);
  CHECK(single[0].images() == std::vector<int>{1, 0});
  CHECK(single[1].is_identity());

  // r = x y x^-1: x -> (0 1)(2 3), y -> (1 2), image of r sends 0 to 3
  GroupWord conj;
  conj.append(0, false);
  conj.append(1, false);
  conj.append(0, true);
  const auto images = residual_witness(conj, 2);
  CHECK(images[0].images() == std::vector<int>{1, 0, 3, 2});
  CHECK(images[1].images() == std::vector<int>{0, 2, 1, 3});
  const auto r_image = images[0].then(images[1]).then(images[0].inverse());
  CHECK(r_image.apply(0) == 3);

  // r = x x: partial {0->1, 1->2} completed to the 3-cycle
  GroupWord xx;
  xx.append(0, false);
  xx.append(0, false);
  const auto squared = residual_witness(xx, 1);
  CHECK(squared[0].images() == std::vector<int>{1, 2, 0});
  CHECK(squared[0].then(squared[0]).apply(0) == 2);

  CHECK_THROWS_AS(residual_witness(GroupWord{}, 2), EmptyWordError);
}

TEST_CASE("separate spec examples") {
  PairedAlphabet a2(2);

  const auto cert_a = separate(a2, w2("a"));
  CHECK(cert_a.quotient.degree() == 2);
  CHECK(cert_a.quotient.image(0).images() == std::vector<int>{1, 0});
  CHECK(cert_a.quotient.image(1).images() == std::vector<int>{1, 0});
  CHECK(cert_a.quotient.evaluate(w2("a")).apply(0) == 1);
  CHECK(cert_a.quotient.evaluate(w2("aA")).is_identity());

  CHECK_THROWS_AS(separate(a2, w2("Aa")), NotSeparableError);

  const auto cert_aab = separate(a2, w2("aab"));
  CHECK(cert_aab.quotient.degree() == 4);
  CHECK(cert_aab.quotient.evaluate(w2("aab")).apply(0) == 3);
}

TEST_CASE("verify_separation") {
  PairedAlphabet a2(2);

  const auto cert_a = separate(a2, w2("a"));
  const auto report = verify_separation(cert_a, w2("a"), 6);
  CHECK(report.passed());
  // empty word + one-sided words of lengths 2, 4, 6
  CHECK(report.one_sided_words_checked == 1 + 2 + 8 + 40);

  const auto cert_aab = separate(a2, w2("aab"));
  CHECK(verify_separation(cert_aab, w2("aab"), 4).passed());

  // tampering with the closer image breaks the structural check
  std::vector<Permutation> tampered{cert_a.quotient.image(0), Permutation::identity(2),
                                    cert_a.quotient.image(2), cert_a.quotient.image(3)};
  const SeparationCertificate bad{FiniteQuotient(a2, std::move(tampered)), w2("a"), 0};
  const auto bad_report = verify_separation(bad, w2("a"), 4);
  CHECK_FALSE(bad_report.images_pairwise_inverse);
  CHECK_FALSE(bad_report.passed());
}

TEST_CASE("completeness and soundness to length 5") {
  PairedAlphabet a2(2);
  for (std::size_t len = 0; len <= 5; ++len) {
    WordEnumerator en(a2, len);
    Word buf;
    while (en.next(buf)) {
      if (is_two_sided_quick(buf)) {
        CHECK_THROWS_AS(separate(a2, buf), NotSeparableError);
      } else {
        const auto cert = separate(a2, buf);
        CHECK(cert.quotient.degree() ==
              static_cast<int>(group_image(buf).length()) + 1);
        CHECK(cert.quotient.degree() <= static_cast<int>(buf.size()) + 1);
        CHECK(verify_separation(cert, buf, 6).passed());
      }
    }
  }
}

TEST_CASE("separate never succeeds on a member, exhaustive to length 7") {
  PairedAlphabet a2(2);
  for (std::size_t len = 0; len <= 7; len += 2) {
    WordEnumerator en(a2, len);
    Word buf;
    while (en.next(buf)) {
      if (!is_two_sided_quick(buf)) continue;
      CHECK_THROWS_AS(separate(a2, buf), NotSeparableError);
    }
  }
}

TEST_CASE("dichotomy at desk scale") {
  PairedAlphabet a2(2);
  const auto suite = standard_suite(a2);
  for (std::size_t len = 0; len <= 4; ++len) {
    WordEnumerator en(a2, len);
    Word buf;
    while (en.next(buf)) {
      if (is_two_sided_quick(buf)) {
        for (const auto& named : suite) {
          const Word witness = approximate(named.quotient, buf);
          CHECK(verify_approximation(named.quotient, buf, witness).passed());
        }
      } else {
        CHECK(verify_separation(separate(a2, buf), buf, 4).passed());
      }
    }
  }
}

TEST_CASE("certificate file round-trip") {
  PairedAlphabet a2(2);
  const auto cert = separate(a2, w2("aab"));
  const std::string text = certificate_to_string(cert);

  std::istringstream in(text);
  const auto back = read_certificate(in);
  CHECK(back.quotient == cert.quotient);
  CHECK(back.word == cert.word);
  CHECK(back.moved_point == cert.moved_point);
  CHECK(certificate_to_string(back) == text);

  // trailer must replay
  std::string corrupted = text;
  corrupted.replace(corrupted.find("moves_point_to: 3"), std::string::npos,
                    "moves_point_to: 1\n");
  std::istringstream bad(corrupted);
  CHECK_THROWS_AS(read_certificate(bad), Error);
}
