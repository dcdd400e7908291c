#ifndef DYCK_SEPARATION_HPP
#define DYCK_SEPARATION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dyck/free_group.hpp"
#include "dyck/quotient.hpp"

namespace dyck {

// Standard residual-finiteness construction.  For a nonempty reduced word
// r over rank generators, returns one permutation per generator on the
// points 0..|r|: reading the t-th entry (1-based), a positive entry for
// generator i constrains its image to send t-1 to t, an inverted entry
// constrains it to send t to t-1.  Reducedness keeps the partial maps
// injective; they are completed to permutations by matching the unused
// domain and codomain points in ascending order.  The resulting image of
// r sends 0 to |r|.  Throws EmptyWordError on the identity.
std::vector<Permutation> residual_witness(const GroupWord& r, int rank);

// A finite quotient that maps every one-sided (indeed every two-sided)
// word to the identity but moves a point under the given word, witnessing
// that the word is outside the closure of the one-sided language.
struct SeparationCertificate {
  FiniteQuotient quotient;
  Word word;
  int moved_point = 0;
};

// Closedness direction: builds the residual witness for the reduced group
// image of w and assigns image(closer) = image(opener)^(-1), so the
// quotient factors through the folding homomorphism by construction.
// Throws NotSeparableError when w is a two-sided member (its reduced
// image is empty and no certificate exists).
SeparationCertificate separate(const PairedAlphabet& alphabet, const Word& w);

struct SeparationReport {
  bool moves_point = false;              // evaluate(q, w) moves moved_point
  bool images_pairwise_inverse = false;  // structural flag, implies the next
  bool one_sided_all_identity = false;   // empirical re-check up to the bound
  std::uint64_t one_sided_words_checked = 0;
  bool passed() const {
    return moves_point && images_pairwise_inverse && one_sided_all_identity;
  }
};

// Re-checks a certificate: the moved point, the structural inverse-pair
// flag, and exhaustively that every one-sided word of length <= bound
// evaluates to the identity.
SeparationReport verify_separation(const SeparationCertificate& cert, const Word& w,
                                   std::size_t bound);

// Certificate file = quotient file plus trailer:
//   word: <letter-mode text>
//   moved_point: 0
//   image_of_word_moves_point_to: <t>
void write_certificate(std::ostream& out, const SeparationCertificate& cert);
std::string certificate_to_string(const SeparationCertificate& cert);
SeparationCertificate read_certificate(std::istream& in);

}  // namespace dyck

#endif
