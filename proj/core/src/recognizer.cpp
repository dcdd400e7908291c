#include "dyck/recognizer.hpp"

#include <algorithm>
#include <sstream>

#include "dyck/errors.hpp"

namespace dyck {

namespace {

// Positions covered once, letters involution-coupled, orientation flags
// consistent, pairs non-crossing.
bool crossing_free(const std::vector<MatchedPair>& pairs) {
  // a pair crosses another iff exactly one endpoint lies strictly inside it
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  spans.reserve(pairs.size());
  for (const auto& p : pairs) spans.emplace_back(p.left, p.right);
  std::sort(spans.begin(), spans.end());
  std::vector<std::size_t> open;
  for (const auto& [l, r] : spans) {
    while (!open.empty() && open.back() < l) open.pop_back();
    if (!open.empty() && open.back() < r) return false;  // straddles an open span
    open.push_back(r);
  }
  return true;
}

}  // namespace

bool matching_is_valid(const Word& w, const MatchingCertificate& cert,
                       bool require_opening_only) {
  const std::size_t n = w.size();
  std::vector<bool> covered(n, false);
  for (const auto& p : cert.pairs) {
    if (p.left >= p.right || p.right >= n) return false;
    if (covered[p.left] || covered[p.right]) return false;
    covered[p.left] = covered[p.right] = true;
    if (involution(w[p.left]) != w[p.right]) return false;
    const bool left_opens = is_opener(w[p.left]);
    if (p.orientation != (left_opens ? MatchOrientation::opening
                                     : MatchOrientation::closing))
      return false;
    if (require_opening_only && p.orientation != MatchOrientation::opening)
      return false;
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
    return false;
  return crossing_free(cert.pairs);
}

std::string format_matching(const MatchingCertificate& cert) {
  std::ostringstream out;
  for (const auto& p : cert.pairs)
    out << p.left << ' ' << p.right << ' '
        << (p.orientation == MatchOrientation::opening ? 'O' : 'C') << '\n';
  return out.str();
}

OneSidedResult is_one_sided(const Word& w) {
  OneSidedResult result{true, {}, 0};
  std::vector<std::size_t> open_positions;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter l = w[i];
    if (is_opener(l)) {
      open_positions.push_back(i);
      continue;
    }
    if (open_positions.empty() ||
        pair_of(w[open_positions.back()]) != pair_of(l)) {
      return {false, {}, i};  // offending closer
    }
    result.certificate.pairs.push_back(
        {open_positions.back(), i, MatchOrientation::opening});
    open_positions.pop_back();
  }
  if (!open_positions.empty())
    return {false, {}, open_positions.front()};  // first unmatched opener
  std::sort(result.certificate.pairs.begin(), result.certificate.pairs.end(),
            [](const MatchedPair& a, const MatchedPair& b) { return a.left < b.left; });
  return result;
}

bool is_one_sided_quick(const Word& w) {
  std::vector<int> open_pairs;
  for (const Letter l : w) {
    if (is_opener(l)) {
      open_pairs.push_back(pair_of(l));
    } else {
      if (open_pairs.empty() || open_pairs.back() != pair_of(l)) return false;
      open_pairs.pop_back();
    }
  }
  return open_pairs.empty();
}

ReductionTrace reduce_trace(const Word& w) {
  ReductionTrace trace;
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter l : w) {
    stack.push_back(l);
    if (stack.size() >= 2 && involution(stack[stack.size() - 2]) == stack.back()) {
      trace.steps.push_back(
          {stack.size() - 2, stack[stack.size() - 2], stack.back()});
      stack.pop_back();
      stack.pop_back();
    }
  }
  trace.residual = Word(std::move(stack));
  return trace;
}

std::string format_trace(const ReductionTrace& trace, const PairedAlphabet& alphabet,
                         DisplayMode mode) {
  std::ostringstream out;
  std::size_t k = 1;
  for (const auto& step : trace.steps) {
    out << "step " << k++ << ": delete (" << alphabet.symbol(step.left, mode) << ','
        << alphabet.symbol(step.right, mode) << ") at " << step.position << '\n';
  }
  return out.str();
}

namespace {

// Stack scan tracking original positions; fills the cancellation matching.
// Returns the residual letters.
std::vector<Letter> reduce_with_matching(const Word& w, MatchingCertificate& cert) {
  std::vector<std::pair<Letter, std::size_t>> stack;
  stack.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter l = w[i];
    if (!stack.empty() && involution(stack.back().first) == l) {
      const auto [left_letter, left_pos] = stack.back();
      stack.pop_back();
      cert.pairs.push_back({left_pos, i,
                            is_opener(left_letter) ? MatchOrientation::opening
                                                   : MatchOrientation::closing});
    } else {
      stack.emplace_back(l, i);
    }
  }
  std::vector<Letter> residual;
  residual.reserve(stack.size());
  for (const auto& [letter, pos] : stack) residual.push_back(letter);
  return residual;
}

}  // namespace

TwoSidedResult is_two_sided(const Word& w) {
  TwoSidedResult result{false, {}, {}};
  if (w.size() % 2 != 0) {
    // parity shortcut: cannot be a member, reduce only for the residual
    result.residual = reduce_trace(w).residual;
    return result;
  }
  MatchingCertificate cert;
  auto residual = reduce_with_matching(w, cert);
  if (!residual.empty()) {
    result.residual = Word(std::move(residual));
    return result;
  }
  std::sort(cert.pairs.begin(), cert.pairs.end(),
            [](const MatchedPair& a, const MatchedPair& b) { return a.left < b.left; });
  result.accepted = true;
  result.certificate = std::move(cert);
  return result;
}

bool is_two_sided_quick(const Word& w) {
  if (w.size() % 2 != 0) return false;
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter l : w) {
    if (!stack.empty() && involution(stack.back()) == l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return stack.empty();
}

MatchingCertificate noncrossing_matching(const Word& w) {
  auto result = is_two_sided(w);
  if (!result.accepted) {
    PairedAlphabet widest(PairedAlphabet::kMaxPairs);
    throw NotTwoSidedError("word is not a two-sided member",
                           format_word(result.residual, widest, DisplayMode::letters));
  }
  return std::move(result.certificate);
}

Classification classify(const Word& w) {
  if (is_one_sided_quick(w)) return Classification::one_sided;
  if (is_two_sided_quick(w)) return Classification::two_sided_only;
  return Classification::neither;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::one_sided: return "one_sided";
    case Classification::two_sided_only: return "two_sided_only";
    case Classification::neither: return "neither";
  }
  return "unknown";
}

}  // namespace dyck
