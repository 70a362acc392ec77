#include "maxnorm/perm.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "maxnorm/errors.hpp"

namespace maxnorm
{

Permutation::Permutation(std::size_t degree)
: images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images)
{
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw PreconditionError("image list is not a bijection");
    seen[x] = true;
  }

  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(
  std::size_t degree, std::vector<std::vector<Point>> const &cycles)
{
  Permutation p(degree);
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x < 1 || x > degree)
        throw PreconditionError("point " + std::to_string(x)
                                + " outside 1.." + std::to_string(degree));
      if (used[x - 1])
        throw PreconditionError("point " + std::to_string(x)
                                + " appears twice in cycle notation");
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  }

  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;

  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i == text.size())
    throw PreconditionError("empty cycle notation");

  while (i < text.size()) {
    if (text[i] != '(')
      throw PreconditionError("expected '(' in cycle notation: "
                              + std::string(text));
    ++i;

    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw PreconditionError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw PreconditionError("unexpected character in cycle notation: "
                                + std::string(text));

      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > std::numeric_limits<Point>::max())
          throw PreconditionError("point label too large");
        ++i;
      }
      cycle.push_back(static_cast<Point>(v));
    }

    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_ws();
  }

  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x)
      return false;
  }
  return true;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  for (auto const &c : cycles()) {
    std::uint64_t len = c.size();
    std::uint64_t g = std::gcd(result, len);
    if (result / g > std::numeric_limits<std::uint64_t>::max() / len)
      throw ResourceError("element order overflows 64 bits");
    result = result / g * len;
  }
  return result;
}

Permutation Permutation::pow(std::int64_t e) const
{
  Permutation base = e < 0 ? inverse(*this) : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                          : static_cast<std::uint64_t>(e);

  Permutation result(degree());
  while (n) {
    if (n & 1u)
      result = compose(result, base);
    base = compose(base, base);
    n >>= 1;
  }
  return result;
}

Point Permutation::smallest_moved_point() const
{
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x)
      return static_cast<Point>(x);
  }
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);

  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;

    std::vector<Point> cycle;
    Point x = static_cast<Point>(start);
    while (!seen[x]) {
      seen[x] = true;
      cycle.push_back(x);
      x = images_[x];
    }
    result.push_back(std::move(cycle));
  }

  return result;
}

std::string Permutation::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream os;
  for (auto const &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

std::uint64_t mix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t Permutation::hash(std::uint64_t seed) const
{
  std::uint64_t h = mix64(seed ^ images_.size());
  for (Point x : images_)
    h = mix64(h ^ x) + 0x632be59bd9b4e019ull;
  return h;
}

Permutation compose(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch(a.degree(), b.degree());

  std::vector<Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = b[a[static_cast<Point>(x)]];

  return Permutation::unchecked(std::move(images));
}

Permutation inverse(Permutation const &a)
{
  std::vector<Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[a[static_cast<Point>(x)]] = static_cast<Point>(x);

  return Permutation::unchecked(std::move(images));
}

Permutation conjugate(Permutation const &a, Permutation const &g)
{
  if (a.degree() != g.degree())
    throw DegreeMismatch(a.degree(), g.degree());

  // g^-1 a g maps g(x) to g(a(x)).
  std::vector<Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[g[static_cast<Point>(x)]] = g[a[static_cast<Point>(x)]];

  return Permutation::unchecked(std::move(images));
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return inverse(a) * inverse(b) * a * b;
}

} // namespace maxnorm
