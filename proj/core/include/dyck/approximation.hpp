#ifndef DYCK_APPROXIMATION_HPP
#define DYCK_APPROXIMATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dyck/quotient.hpp"
#include "dyck/recognizer.hpp"

namespace dyck {

// One-sided replacement material for the closing-order couples of one
// alphabet pair, relative to a fixed quotient.
//
// With N the pair exponent and base = image(opener)^(N-1) then
// image(closer)^(N-1), of order M:
//   gadget g  = (opener^(N-1) closer^(N-1))^(M-1), balanced one-sided,
//               evaluating to the image of the closing-order couple;
//   head  g1  = g opener^(N-1), evaluating to image(closer);
//   tail  g2  = closer^(N-1) g, evaluating to image(opener).
// g1 followed by g2 is one-sided with the junction gap at stack height
// N-1, so any balanced one-sided word may sit between them.
struct PairGadget {
  std::int64_t exponent;    // N
  std::int64_t base_order;  // M
  Word gadget;              // g
  Word head;                // g1
  Word tail;                // g2
};

struct GadgetSet {
  std::vector<PairGadget> per_pair;
};

// Computes the gadget family for every pair and self-checks all gadget
// identities; throws InternalError if any fails.
GadgetSet build_gadgets(const FiniteQuotient& q);

// Density direction: for w in the two-sided language, returns a one-sided
// word evaluating to the same permutation under q.  Recurses over the
// non-crossing matching of w: opening pairs are copied, closing pairs are
// replaced by the pair's gadget (empty interior) or wrapped in head/tail.
// The result is self-checked for one-sidedness and evaluation equality.
// Throws NotTwoSidedError if w is not a member.
Word approximate(const FiniteQuotient& q, const Word& w);
Word approximate(const FiniteQuotient& q, const Word& w, const GadgetSet& gadgets);

struct ApproximationReport {
  bool input_two_sided = false;
  bool witness_one_sided = false;
  bool evaluations_match = false;
  bool passed() const { return input_two_sided && witness_one_sided && evaluations_match; }
};

// Report-valued re-check of a claimed witness; never throws.
ApproximationReport verify_approximation(const FiniteQuotient& q, const Word& w,
                                         const Word& witness);

}  // namespace dyck

#endif
