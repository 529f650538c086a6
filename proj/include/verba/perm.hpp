#ifndef VERBA_PERM_HPP
#define VERBA_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace verba {

/// A permutation of {1..degree}. Points are 0-based internally and 1-based in
/// all I/O. Composition is left-to-right throughout the project:
/// (a * b) applies a first, then b.
class Perm {
public:
  /// Identity on `degree` points.
  explicit Perm(unsigned degree = 1);

  /// From a 0-based image table. Must be a bijection of {0..n-1}.
  explicit Perm(std::vector<unsigned> images);

  /// From a 1-based image table as used in group JSON files.
  static Perm from_one_based(const std::vector<unsigned>& images);

  /// From cycle notation, e.g. "(1 2 3)(4 5)". Whitespace and commas both
  /// separate points; "()" and "" denote the identity.
  static Perm from_cycles(unsigned degree, const std::string& text);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  bool is_identity() const;

  /// Image of 0-based point `p`.
  unsigned operator[](unsigned p) const { return images_[p]; }

  const std::vector<unsigned>& images() const { return images_; }
  std::vector<unsigned> one_based_images() const;

  /// Left-to-right product: apply *this first, then rhs.
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(std::int64_t n) const;

  bool operator==(const Perm& rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Perm& rhs) const { return images_ != rhs.images_; }

  /// Orders by degree, then lexicographically on the image table. This is the
  /// element order used everywhere a deterministic scan is required.
  bool operator<(const Perm& rhs) const;

  /// Disjoint cycle decomposition (1-based points, fixed points omitted).
  std::vector<std::vector<unsigned>> cycles() const;
  std::string cycle_string() const;

private:
  std::vector<unsigned> images_;
};

Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

/// [a,b] = a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);

/// a^b = b^-1 a b.
Perm conjugate(const Perm& a, const Perm& b);

/// Least m >= 1 with a^m = 1 (lcm of cycle lengths).
std::uint64_t element_order(const Perm& a);

/// [g, x, x, ..., x] with m copies of x; m = 0 returns g.
Perm iterated_commutator(const Perm& g, const Perm& x, unsigned m);

std::ostream& operator<<(std::ostream& os, const Perm& p);

}  // namespace verba

template <>
struct std::hash<verba::Perm> {
  std::size_t operator()(const verba::Perm& p) const noexcept;
};

#endif
