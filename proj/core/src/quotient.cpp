#include "dyck/quotient.hpp"

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "dyck/errors.hpp"

namespace dyck {

FiniteQuotient::FiniteQuotient(PairedAlphabet alphabet,
                               std::vector<Permutation> letter_images)
    : alphabet_(alphabet), degree_(0), images_(std::move(letter_images)) {
  if (static_cast<int>(images_.size()) != alphabet_.letter_count())
    throw Error("quotient needs one permutation per letter");
  degree_ = images_.front().degree();
  for (const auto& p : images_)
    if (p.degree() != degree_) throw Error("letter images must share one degree");
}

const Permutation& FiniteQuotient::image(Letter l) const {
  if (!alphabet_.contains(l)) throw Error("letter value outside alphabet");
  return images_[l];
}

Permutation FiniteQuotient::evaluate(const Word& w) const {
  // leftmost letter applied first; tracked pointwise to avoid
  // materializing intermediate permutations
  std::vector<int> points(degree_);
  std::iota(points.begin(), points.end(), 0);
  for (const Letter l : w) {
    if (!alphabet_.contains(l)) throw Error("letter value outside alphabet");
    const auto& images = images_[l].images();
    for (int& p : points) p = images[p];
  }
  return Permutation::from_images(std::move(points));
}

std::int64_t letter_order(const FiniteQuotient& q, Letter l) {
  return permutation_order(q.image(l));
}

std::int64_t pair_exponent(const FiniteQuotient& q, int pair_index) {
  return std::lcm(letter_order(q, opener_of_pair(pair_index)),
                  letter_order(q, closer_of_pair(pair_index)));
}

FiniteQuotient trivial_quotient(const PairedAlphabet& alphabet) {
  std::vector<Permutation> images(alphabet.letter_count(), Permutation::identity(1));
  return FiniteQuotient(alphabet, std::move(images));
}

FiniteQuotient random_quotient(const PairedAlphabet& alphabet, int degree,
                               std::uint64_t seed) {
  if (degree < 1) throw Error("quotient degree must be positive");
  std::mt19937_64 engine(seed);
  std::vector<Permutation> images;
  images.reserve(alphabet.letter_count());
  for (int letter = 0; letter < alphabet.letter_count(); ++letter) {
    std::vector<int> v(degree);
    std::iota(v.begin(), v.end(), 0);
    for (int i = degree - 1; i >= 1; --i) {
      const auto j = static_cast<int>(engine() % static_cast<std::uint64_t>(i + 1));
      std::swap(v[i], v[j]);
    }
    images.push_back(Permutation::from_images(std::move(v)));
  }
  return FiniteQuotient(alphabet, std::move(images));
}

bool factors_through_pairing(const FiniteQuotient& q) {
  for (int pair = 0; pair < q.alphabet().pair_count(); ++pair) {
    if (q.image(closer_of_pair(pair)) != q.image(opener_of_pair(pair)).inverse())
      return false;
  }
  return true;
}

void write_quotient(std::ostream& out, const FiniteQuotient& q) {
  out << "degree " << q.degree() << '\n';
  out << "pairs " << q.alphabet().pair_count() << '\n';
  for (int letter = 0; letter < q.alphabet().letter_count(); ++letter) {
    out << q.alphabet().symbol(static_cast<Letter>(letter), DisplayMode::letters) << ':';
    for (const int v : q.image(static_cast<Letter>(letter)).images()) out << ' ' << v;
    out << '\n';
  }
}

std::string quotient_to_string(const FiniteQuotient& q) {
  std::ostringstream out;
  write_quotient(out, q);
  return out.str();
}

FiniteQuotient read_quotient(std::istream& in) {
  std::string keyword;
  int degree = 0;
  int pairs = 0;
  if (!(in >> keyword) || keyword != "degree" || !(in >> degree) || degree < 1)
    throw Error("quotient file: expected 'degree K'");
  if (!(in >> keyword) || keyword != "pairs" || !(in >> pairs) || pairs < 1)
    throw Error("quotient file: expected 'pairs N'");
  PairedAlphabet alphabet(pairs);
  std::vector<Permutation> images;
  images.reserve(alphabet.letter_count());
  for (int letter = 0; letter < alphabet.letter_count(); ++letter) {
    const std::string expected =
        std::string(1, alphabet.symbol(static_cast<Letter>(letter), DisplayMode::letters)) + ":";
    if (!(in >> keyword) || keyword != expected)
      throw Error("quotient file: expected line for letter '" + expected + "'");
    std::vector<int> v(degree);
    for (int i = 0; i < degree; ++i)
      if (!(in >> v[i])) throw Error("quotient file: truncated image list");
    images.push_back(Permutation::from_images(std::move(v)));
  }
  return FiniteQuotient(alphabet, std::move(images));
}

FiniteQuotient load_quotient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open quotient file: " + path);
  return read_quotient(in);
}

}  // namespace dyck
