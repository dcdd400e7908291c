#ifndef DYCK_QUOTIENT_HPP
#define DYCK_QUOTIENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dyck/permutation.hpp"
#include "dyck/word.hpp"

namespace dyck {

// A homomorphism from the free group on the 2n letters to a symmetric
// group, given by an independent permutation per letter.  Its kernel is a
// finite-index normal subgroup; evaluation equality modulo the quotient
// is the operational form of congruence modulo that subgroup.
//
// No relation is imposed between the opener and closer images: the two
// letters of a pair are independent generators.
class FiniteQuotient {
 public:
  FiniteQuotient(PairedAlphabet alphabet, std::vector<Permutation> letter_images);

  const PairedAlphabet& alphabet() const { return alphabet_; }
  int degree() const { return degree_; }

  const Permutation& image(Letter l) const;

  // Product of the letter images in word order, leftmost letter applied
  // first.  The empty word evaluates to the identity.
  Permutation evaluate(const Word& w) const;

  bool operator==(const FiniteQuotient&) const = default;

 private:
  PairedAlphabet alphabet_;
  int degree_;
  std::vector<Permutation> images_;  // indexed by letter value
};

// Least m >= 1 with image(letter)^m = identity.
std::int64_t letter_order(const FiniteQuotient& q, Letter l);

// N = lcm of the two letter orders of the pair.  Both letter images raised
// to N give the identity, so image(letter)^(N-1) = image(letter)^(-1).
std::int64_t pair_exponent(const FiniteQuotient& q, int pair_index);

// Every letter maps to the identity on one point.
FiniteQuotient trivial_quotient(const PairedAlphabet& alphabet);

// Deterministic function of (alphabet, degree, seed): letters are drawn in
// letter order a, A, b, B, ... from one std::mt19937_64 engine seeded with
// `seed`; each image is a Fisher-Yates shuffle of the identity with
// j = engine() % (i + 1) for i = degree-1 down to 1.
FiniteQuotient random_quotient(const PairedAlphabet& alphabet, int degree,
                               std::uint64_t seed);

// True when image(closer) is the inverse of image(opener) for every pair,
// i.e. the quotient factors through the folding homomorphism and every
// two-sided member evaluates to the identity.
bool factors_through_pairing(const FiniteQuotient& q);

// Text file format, bit-exact:
//   degree K
//   pairs N
//   a: i0 i1 ... i{K-1}      (one line per letter in order a, A, b, B, ...)
void write_quotient(std::ostream& out, const FiniteQuotient& q);
std::string quotient_to_string(const FiniteQuotient& q);
FiniteQuotient read_quotient(std::istream& in);
FiniteQuotient load_quotient_file(const std::string& path);

}  // namespace dyck

#endif
