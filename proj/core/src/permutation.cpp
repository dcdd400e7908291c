#include "dyck/permutation.hpp"

#include <numeric>
#include <sstream>

#include "dyck/errors.hpp"

namespace dyck {

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw Error("permutation degree must be positive");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int k = static_cast<int>(images.size());
  if (k < 1) throw Error("permutation degree must be positive");
  std::vector<bool> seen(k, false);
  for (const int v : images) {
    if (v < 0 || v >= k || seen[v]) throw Error("image list is not a bijection");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& after) const {
  if (degree() != after.degree()) throw Error("degree mismatch in composition");
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[i] = after.images_[images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::power(std::int64_t exponent) const {
  if (exponent < 0) throw Error("negative exponent");
  Permutation result = identity(degree());
  Permutation base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result.then(base);
    base = base.then(base);
    exponent >>= 1;
  }
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cycle;
    int p = start;
    while (!seen[p]) {
      seen[p] = true;
      cycle.push_back(p);
      p = images_[p];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::int64_t permutation_order(const Permutation& p) {
  std::int64_t order = 1;
  for (const auto& cycle : p.cycles())
    order = std::lcm(order, static_cast<std::int64_t>(cycle.size()));
  return order;
}

std::string format_cycles(const Permutation& p) {
  const auto cs = p.cycles();
  if (cs.empty()) return "id";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

}  // namespace dyck
