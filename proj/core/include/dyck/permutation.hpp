#ifndef DYCK_PERMUTATION_HPP
#define DYCK_PERMUTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dyck {

// A permutation of {0..k-1}, stored as its image sequence.
class Permutation {
 public:
  static Permutation identity(int degree);

  // Validates that `images` is a bijection of {0..k-1}.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  // Diagrammatic composition: (*this).then(after) applies *this first.
  Permutation then(const Permutation& after) const;

  Permutation inverse() const;

  // Nonnegative exponent.
  Permutation power(std::int64_t exponent) const;

  // Cycles of length >= 2, each rotated to start at its least point,
  // sorted by that point.
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

// lcm of the cycle lengths.
std::int64_t permutation_order(const Permutation& p);

// "(0 1)(2 4)" style, "id" for the identity.
std::string format_cycles(const Permutation& p);

}  // namespace dyck

#endif
