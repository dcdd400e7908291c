#ifndef DYCK_FREE_GROUP_HPP
#define DYCK_FREE_GROUP_HPP

#include <string>
#include <vector>

#include "dyck/word.hpp"

namespace dyck {

// A freely reduced word over the rank-n free group generators.  The
// reduced form is maintained on every append, so identity testing and
// equality are plain comparisons.
class GroupWord {
 public:
  struct Entry {
    int generator;
    bool inverted;
    bool operator==(const Entry&) const = default;
  };

  GroupWord() = default;

  static GroupWord generator(int index, bool inverted = false) {
    GroupWord g;
    g.append(index, inverted);
    return g;
  }

  // Appends one signed generator, cancelling against the current tail.
  void append(int index, bool inverted) {
    if (!entries_.empty() && entries_.back().generator == index &&
        entries_.back().inverted != inverted) {
      entries_.pop_back();
    } else {
      entries_.push_back({index, inverted});
    }
  }

  bool is_identity() const { return entries_.empty(); }
  std::size_t length() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  GroupWord inverted() const {
    GroupWord r;
    r.entries_.reserve(entries_.size());
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      r.entries_.push_back({it->generator, !it->inverted});
    return r;
  }

  bool operator==(const GroupWord&) const = default;

 private:
  std::vector<Entry> entries_;
};

// Concatenate-and-reduce product; associative with the empty word as
// identity.
GroupWord free_multiply(const GroupWord& u, const GroupWord& v);

// Image of a monoid word under the folding homomorphism that sends the
// opener of pair i to generator i and the closer to its group inverse.
// The result is freely reduced.
GroupWord group_image(const Word& w);

// True exactly when the word maps to the group identity, i.e. lies in the
// kernel of the folding homomorphism.
bool kernel_member(const Word& w);

// "x", "X" (inverse), "y", "Y", "z", "Z" for the first three generators;
// higher ranks print as x3, X3, ...  Empty string for the identity.
std::string format_group_word(const GroupWord& g);

}  // namespace dyck

#endif
