#ifndef DYCK_RECOGNIZER_HPP
#define DYCK_RECOGNIZER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dyck/word.hpp"

namespace dyck {

// Whether the left position of a matched pair holds the opener (the pair
// cancelled as "opener closer") or the closer ("closer opener").
enum class MatchOrientation { opening, closing };

struct MatchedPair {
  std::size_t left;
  std::size_t right;
  MatchOrientation orientation;
  bool operator==(const MatchedPair&) const = default;
};

// A non-crossing perfect matching of word positions; each matched pair
// couples an opener with the closer of the same alphabet pair.  For a
// one-sided certificate every pair has opening orientation.
struct MatchingCertificate {
  std::vector<MatchedPair> pairs;  // sorted by left position
  bool operator==(const MatchingCertificate&) const = default;
};

// Checks all certificate invariants against the word: perfect coverage,
// non-crossing, involution-matched letters, orientation flags consistent
// with the letters.  With require_opening_only also rejects any closing
// pair.
bool matching_is_valid(const Word& w, const MatchingCertificate& cert,
                       bool require_opening_only = false);

// One "i j O|C" line per pair, sorted by i.
std::string format_matching(const MatchingCertificate& cert);

struct OneSidedResult {
  bool accepted;
  MatchingCertificate certificate;  // meaningful iff accepted
  std::size_t failure_position;     // meaningful iff not accepted
};

// Stack discipline: every closer must match the most recent unmatched
// opener of its own pair and the stack must end empty.  On failure
// reports the offending closer, or the first unmatched opener when the
// word ends with the stack nonempty.
OneSidedResult is_one_sided(const Word& w);
bool is_one_sided_quick(const Word& w);

// One deletion of an adjacent involution couple.  `position` is the index
// of the left letter in the word as it stood when the couple was deleted.
struct ReductionStep {
  std::size_t position;
  Letter left;
  Letter right;
  bool operator==(const ReductionStep&) const = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Word residual;
};

// Deterministic leftmost-innermost cancellation of adjacent couples
// (opener-closer in either order).  The residual is empty exactly for
// two-sided members; the residual contains no adjacent couple.
ReductionTrace reduce_trace(const Word& w);

// "step k: delete (x,y) at p" lines, 1-based k, symbols per display mode.
std::string format_trace(const ReductionTrace& trace, const PairedAlphabet& alphabet,
                         DisplayMode mode);

struct TwoSidedResult {
  bool accepted;
  MatchingCertificate certificate;  // meaningful iff accepted
  Word residual;                    // meaningful iff not accepted
};

// Accepts exactly the words whose reduction residual is empty; the
// certificate is the cancellation matching traced back to original
// positions, which is always non-crossing.
TwoSidedResult is_two_sided(const Word& w);
bool is_two_sided_quick(const Word& w);

// The matching induced by reduce_trace.  Throws NotTwoSidedError when the
// residual is nonempty.
MatchingCertificate noncrossing_matching(const Word& w);

enum class Classification { one_sided, two_sided_only, neither };

Classification classify(const Word& w);
std::string to_string(Classification c);

}  // namespace dyck

#endif
