#ifndef MAXNORM_PERM_HPP
#define MAXNORM_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maxnorm
{

/// Internal point label. Points are 0-based in memory and 1-based in every
/// external format (cycle notation, files, reports).
using Point = std::uint32_t;

/**
 * A bijection on {0, ..., degree-1}.
 *
 * Products are read left to right: (a * b)(x) = b(a(x)), i.e. a is applied
 * first. Every derived notion (conjugation, cosets, group actions) follows
 * this convention.
 */
class Permutation
{
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Throws PreconditionError unless `images` is a bijection of 0..n-1.
  static Permutation from_images(std::vector<Point> images);

  /// Trusted construction for images already known to be a bijection.
  static Permutation unchecked(std::vector<Point> images)
  {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Cycles are given with 1-based points.
  static Permutation from_cycles(
    std::size_t degree, std::vector<std::vector<Point>> const &cycles);

  /// Parses cycle notation such as "(1 2 3)(4 5)" or "()"; points 1-based.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::vector<Point> const &images() const { return images_; }

  bool is_identity() const;
  std::uint64_t order() const;
  Permutation pow(std::int64_t e) const;

  /// Smallest moved point, or degree() for the identity.
  Point smallest_moved_point() const;

  /// Non-trivial cycles, each starting at its smallest point (0-based).
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation with 1-based points, "()" for the identity.
  std::string str() const;

  std::uint64_t hash(std::uint64_t seed = 0) const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(
    Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> images_;
};

/// x -> b(a(x)).
Permutation compose(Permutation const &a, Permutation const &b);
Permutation inverse(Permutation const &a);

/// g^-1 * a * g.
Permutation conjugate(Permutation const &a, Permutation const &g);

/// a^-1 * b^-1 * a * b.
Permutation commutator(Permutation const &a, Permutation const &b);

inline Permutation operator*(Permutation const &a, Permutation const &b)
{ return compose(a, b); }

std::uint64_t mix64(std::uint64_t x);

/// Order-independent 128-bit fingerprint of a set of permutations.
struct SetKey
{
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  void add(Permutation const &p)
  {
    lo += p.hash(0x9e3779b97f4a7c15ull);
    hi += p.hash(0xc2b2ae3d27d4eb4full);
  }

  void add_point(std::uint64_t x)
  {
    lo += mix64(x ^ 0x9e3779b97f4a7c15ull);
    hi += mix64(x + 0xc2b2ae3d27d4eb4full);
  }

  friend bool operator==(SetKey const &, SetKey const &) = default;
};

struct SetKeyHash
{
  std::size_t operator()(SetKey const &k) const
  { return static_cast<std::size_t>(k.lo ^ mix64(k.hi)); }
};

} // namespace maxnorm

template<>
struct std::hash<maxnorm::Permutation>
{
  std::size_t operator()(maxnorm::Permutation const &p) const
  { return static_cast<std::size_t>(p.hash()); }
};

#endif // MAXNORM_PERM_HPP
