#include "dyck/free_group.hpp"

namespace dyck {

GroupWord free_multiply(const GroupWord& u, const GroupWord& v) {
  GroupWord r = u;
  for (const auto& e : v.entries()) r.append(e.generator, e.inverted);
  return r;
}

GroupWord group_image(const Word& w) {
  GroupWord g;
  for (const Letter l : w) g.append(pair_of(l), is_closer(l));
  return g;
}

bool kernel_member(const Word& w) { return group_image(w).is_identity(); }

std::string format_group_word(const GroupWord& g) {
  std::string out;
  for (const auto& e : g.entries()) {
    if (e.generator < 3) {
      const char base = e.inverted ? 'X' : 'x';
      out.push_back(static_cast<char>(base + e.generator));
    } else {
      out.push_back(e.inverted ? 'X' : 'x');
      out += std::to_string(e.generator);
    }
  }
  return out;
}

}  // namespace dyck
