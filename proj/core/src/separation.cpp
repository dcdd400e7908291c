#include "dyck/separation.hpp"

#include <fstream>
#include <sstream>

#include "dyck/errors.hpp"
#include "dyck/oracle.hpp"

namespace dyck {

std::vector<Permutation> residual_witness(const GroupWord& r, int rank) {
  if (r.is_identity()) throw EmptyWordError("residual witness needs a nonempty word");
  const int degree = static_cast<int>(r.length()) + 1;
  constexpr int kUnset = -1;
  std::vector<std::vector<int>> partial(rank, std::vector<int>(degree, kUnset));

  int t = 0;
  for (const auto& entry : r.entries()) {
    ++t;  // entry positions are 1-based
    if (entry.generator < 0 || entry.generator >= rank)
      throw Error("generator index outside rank");
    auto& map = partial[entry.generator];
    const int from = entry.inverted ? t : t - 1;
    const int to = entry.inverted ? t - 1 : t;
    if (map[from] != kUnset && map[from] != to)
      throw InternalError("partial map conflict on a reduced word");
    map[from] = to;
  }

  std::vector<Permutation> result;
  result.reserve(rank);
  for (int gen = 0; gen < rank; ++gen) {
    auto& map = partial[gen];
    std::vector<bool> used(degree, false);
    for (const int v : map)
      if (v != kUnset) used[v] = true;
    // match unused domain points to unused codomain points in ascending order
    int next_target = 0;
    for (int p = 0; p < degree; ++p) {
      if (map[p] != kUnset) continue;
      while (used[next_target]) ++next_target;
      map[p] = next_target;
      used[next_target] = true;
    }
    result.push_back(Permutation::from_images(std::move(map)));
  }
  return result;
}

SeparationCertificate separate(const PairedAlphabet& alphabet, const Word& w) {
  const GroupWord r = group_image(w);
  if (r.is_identity())
    throw NotSeparableError(
        "word is a two-sided member; it lies in the closure and no "
        "separating quotient exists");

  const auto generator_images = residual_witness(r, alphabet.pair_count());
  std::vector<Permutation> letter_images;
  letter_images.reserve(alphabet.letter_count());
  for (int pair = 0; pair < alphabet.pair_count(); ++pair) {
    letter_images.push_back(generator_images[pair]);
    letter_images.push_back(generator_images[pair].inverse());
  }
  SeparationCertificate cert{FiniteQuotient(alphabet, std::move(letter_images)), w, 0};

  const int moved_to = cert.quotient.evaluate(w).apply(cert.moved_point);
  if (moved_to != static_cast<int>(r.length()))
    throw InternalError("separation certificate does not move point 0 to |r|");
  return cert;
}

SeparationReport verify_separation(const SeparationCertificate& cert, const Word& w,
                                   std::size_t bound) {
  SeparationReport report;
  report.moves_point =
      cert.quotient.evaluate(w).apply(cert.moved_point) != cert.moved_point;
  report.images_pairwise_inverse = factors_through_pairing(cert.quotient);

  report.one_sided_all_identity = true;
  for (std::size_t len = 0; len <= bound; len += 2) {
    for_each_one_sided(cert.quotient.alphabet(), len, [&](const Word& u) {
      ++report.one_sided_words_checked;
      if (!cert.quotient.evaluate(u).is_identity())
        report.one_sided_all_identity = false;
    });
  }
  return report;
}

void write_certificate(std::ostream& out, const SeparationCertificate& cert) {
  write_quotient(out, cert.quotient);
  out << "word: "
      << format_word(cert.word, cert.quotient.alphabet(), DisplayMode::letters) << '\n';
  out << "moved_point: " << cert.moved_point << '\n';
  out << "image_of_word_moves_point_to: "
      << cert.quotient.evaluate(cert.word).apply(cert.moved_point) << '\n';
}

std::string certificate_to_string(const SeparationCertificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

SeparationCertificate read_certificate(std::istream& in) {
  FiniteQuotient q = read_quotient(in);
  std::string keyword;
  std::string word_text;
  if (!(in >> keyword) || keyword != "word:" || !(in >> word_text))
    throw Error("certificate file: expected 'word: <text>'");
  int moved_point = 0;
  if (!(in >> keyword) || keyword != "moved_point:" || !(in >> moved_point))
    throw Error("certificate file: expected 'moved_point: <p>'");
  int moved_to = 0;
  if (!(in >> keyword) || keyword != "image_of_word_moves_point_to:" || !(in >> moved_to))
    throw Error("certificate file: expected 'image_of_word_moves_point_to: <t>'");
  const Word w = parse_word(word_text, q.alphabet(), DisplayMode::letters);
  if (q.evaluate(w).apply(moved_point) != moved_to)
    throw Error("certificate file: moved-point claim does not replay");
  return SeparationCertificate{std::move(q), w, moved_point};
}

}  // namespace dyck
