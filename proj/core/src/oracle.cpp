#include "dyck/oracle.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>

#include "dyck/errors.hpp"
#include "dyck/free_group.hpp"

namespace dyck {

CountTable count_members(const PairedAlphabet& alphabet, LanguageKind kind,
                         std::size_t max_length, std::uint64_t cap) {
  CountTable table{kind, alphabet.pair_count(), {}};
  Word buffer;
  for (std::size_t length = 2; length <= max_length; length += 2) {
    WordEnumerator en(alphabet, length, cap);
    std::uint64_t members = 0;
    while (en.next(buffer)) {
      const bool in = kind == LanguageKind::one_sided ? is_one_sided_quick(buffer)
                                                      : is_two_sided_quick(buffer);
      if (in) ++members;
    }
    table.rows.push_back({length, members});
  }
  return table;
}

std::uint64_t catalan_number(std::size_t k) {
  // C_k = C_{k-1} * 2(2k-1) / (k+1); exact at every step
  if (k > 30) throw Error("catalan_number limited to k <= 30");
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= k; ++i)
    c = c * 2 * (2 * i - 1) / (i + 1);
  return c;
}

std::uint64_t one_sided_closed_form(int pair_count, std::size_t length) {
  if (length % 2 != 0) return 0;
  const std::size_t k = length / 2;
  std::uint64_t value = catalan_number(k);
  for (std::size_t i = 0; i < k; ++i) value *= static_cast<std::uint64_t>(pair_count);
  return value;
}

std::uint64_t tree_walk_count(int pair_count, std::size_t length) {
  // walks on the 2n-regular tree: state = distance from the origin
  const std::uint64_t out_degree = 2 * static_cast<std::uint64_t>(pair_count);
  std::vector<std::uint64_t> dist(length + 1, 0);
  dist[0] = 1;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<std::uint64_t> next(length + 1, 0);
    for (std::size_t d = 0; d <= step; ++d) {
      if (dist[d] == 0) continue;
      if (d == 0) {
        next[1] += dist[0] * out_degree;
      } else {
        next[d - 1] += dist[d];
        if (d + 1 <= length) next[d + 1] += dist[d] * (out_degree - 1);
      }
    }
    dist.swap(next);
  }
  return dist[0];
}

std::string format_count_table(const CountTable& table) {
  std::ostringstream out;
  out << (table.kind == LanguageKind::one_sided ? "one_sided" : "two_sided")
      << " members, " << table.pair_count << " pair"
      << (table.pair_count == 1 ? "" : "s") << '\n';
  out << std::setw(8) << "length" << std::setw(16) << "members" << '\n';
  for (const auto& row : table.rows)
    out << std::setw(8) << row.length << std::setw(16) << row.members << '\n';
  return out.str();
}

std::string count_table_csv(const CountTable& table) {
  std::ostringstream out;
  out << "kind,pairs,length,members\n";
  const char* kind = table.kind == LanguageKind::one_sided ? "one_sided" : "two_sided";
  for (const auto& row : table.rows)
    out << kind << ',' << table.pair_count << ',' << row.length << ',' << row.members
        << '\n';
  return out.str();
}

namespace {

// Depth-first search over one-sided words of exactly `length` letters in
// lexicographic order, keeping the partial evaluation per depth.  Returns
// true when `found` has been filled with the first word evaluating to
// `target`.
bool search_one_sided(const FiniteQuotient& q, std::size_t length,
                      const Permutation& target, Word& current,
                      std::vector<int>& open_stack,
                      std::vector<Permutation>& partial, Word& found) {
  if (current.size() == length) {
    if (partial.back() == target) {
      found = current;
      return true;
    }
    return false;
  }
  const std::size_t remaining = length - current.size();
  for (Letter l = 0; l < 2 * q.alphabet().pair_count(); ++l) {
    if (is_opener(l)) {
      if (open_stack.size() + 1 > remaining - 1) continue;
      open_stack.push_back(pair_of(l));
    } else {
      if (open_stack.empty() || open_stack.back() != pair_of(l)) continue;
      open_stack.pop_back();
    }
    current.push_back(l);
    partial.push_back(partial.back().then(q.image(l)));
    if (search_one_sided(q, length, target, current, open_stack, partial, found))
      return true;
    partial.pop_back();
    current.pop_back();
    if (is_opener(l))
      open_stack.pop_back();
    else
      open_stack.push_back(pair_of(l));
  }
  return false;
}

}  // namespace

std::optional<Word> bfs_minimal_witness(const FiniteQuotient& q, const Word& w,
                                        std::size_t max_length) {
  auto two_sided = is_two_sided(w);
  if (!two_sided.accepted)
    throw NotTwoSidedError(
        "minimal witness search needs a two-sided member",
        format_word(two_sided.residual, q.alphabet(), DisplayMode::letters));
  const Permutation target = q.evaluate(w);
  for (std::size_t length = 0; length <= max_length; length += 2) {
    Word current;
    current.reserve(length);
    std::vector<int> open_stack;
    std::vector<Permutation> partial{Permutation::identity(q.degree())};
    Word found;
    if (search_one_sided(q, length, target, current, open_stack, partial, found))
      return found;
  }
  return std::nullopt;
}

EquivalenceReport exhaustive_equivalence(const PairedAlphabet& alphabet,
                                         std::size_t max_length, std::uint64_t cap) {
  EquivalenceReport report;
  std::uint64_t total = 0;
  for (std::size_t length = 0; length <= max_length; ++length) {
    const auto count = count_all_words(alphabet, length, cap);
    if (!count || total + *count > cap)
      throw ResourceBoundError("equivalence sweep exceeds the enumeration cap");
    total += *count;
  }
  Word buffer;
  for (std::size_t length = 0; length <= max_length; ++length) {
    WordEnumerator en(alphabet, length, cap);
    while (en.next(buffer)) {
      ++report.words_checked;
      if (is_two_sided_quick(buffer) != kernel_member(buffer)) {
        report.first_discrepancy = buffer;
        report.passed = false;
        return report;
      }
    }
  }
  report.passed = true;
  return report;
}

std::vector<NamedQuotient> standard_suite(const PairedAlphabet& alphabet) {
  std::vector<NamedQuotient> suite;
  suite.push_back({"trivial", trivial_quotient(alphabet)});

  {
    std::vector<int> swap01{1, 0};
    std::vector<Permutation> images(alphabet.letter_count(),
                                    Permutation::from_images(swap01));
    suite.push_back({"mod-2", FiniteQuotient(alphabet, std::move(images))});
  }

  {
    const auto cycle3 = Permutation::from_images({1, 2, 0});
    std::vector<Permutation> images(alphabet.letter_count(), Permutation::identity(3));
    images[opener_of_pair(0)] = cycle3;
    images[closer_of_pair(0)] = cycle3;
    suite.push_back({"cyclic-3", FiniteQuotient(alphabet, std::move(images))});
  }

  for (int i = 0; i < 20; ++i) {
    const int degree = 2 + i % 4;
    const std::uint64_t seed = 101 + static_cast<std::uint64_t>(i);
    std::ostringstream name;
    name << "random-d" << degree << "-s" << seed;
    suite.push_back({name.str(), random_quotient(alphabet, degree, seed)});
  }
  return suite;
}

}  // namespace dyck
