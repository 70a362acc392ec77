#include "maxnorm/catalog.hpp"

#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "maxnorm/errors.hpp"

namespace maxnorm
{

namespace
{

Permutation from_map(std::size_t degree, std::function<Point(Point)> const &f)
{
  std::vector<Point> images(degree);
  for (Point x = 0; x < degree; ++x)
    images[x] = f(x);
  return Permutation::from_images(std::move(images));
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1)
      r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

// The field with p^k elements as base-p digit vectors, encoded as integers
// 0..q-1, modulo a monic polynomial for which a primitive element exists.
class FiniteField
{
public:
  explicit FiniteField(std::uint64_t q)
  {
    for (std::uint64_t p = 2; p <= q; ++p) {
      if (q % p == 0) {
        p_ = p;
        break;
      }
    }
    if (!is_prime(p_))
      throw PreconditionError("field order must be a prime power");
    q_ = 1;
    k_ = 0;
    while (q_ < q) {
      q_ *= p_;
      ++k_;
    }
    if (q_ != q)
      throw PreconditionError("field order must be a prime power");

    // Lower coefficients of a monic degree-k modulus; x^k = -sum c_i x^i.
    for (std::uint64_t code = 0; code < q_; ++code) {
      modulus_ = digits(code);
      for (std::uint64_t a = 1; a < q_; ++a) {
        if (multiplicative_order(a) == q_ - 1) {
          primitive_ = a;
          return;
        }
      }
    }
    throw PreconditionError("no field modulus found");
  }

  std::uint64_t size() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  std::size_t degree() const { return k_; }
  std::uint64_t primitive() const { return primitive_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const
  {
    auto x = digits(a), y = digits(b);
    for (std::size_t i = 0; i < k_; ++i)
      x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
  {
    auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> prod(2 * k_, 0);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j)
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    for (std::size_t d = 2 * k_; d-- > k_;) {
      auto c = prod[d];
      if (c == 0)
        continue;
      prod[d] = 0;
      for (std::size_t i = 0; i < k_; ++i)
        prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) * c) % p_;
    }
    prod.resize(k_);
    return encode(prod);
  }

private:
  std::vector<std::uint64_t> digits(std::uint64_t a) const
  {
    std::vector<std::uint64_t> d(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  std::uint64_t encode(std::vector<std::uint64_t> const &d) const
  {
    std::uint64_t a = 0;
    for (std::size_t i = k_; i-- > 0;)
      a = a * p_ + d[i];
    return a;
  }

  std::uint64_t multiplicative_order(std::uint64_t a) const
  {
    std::uint64_t x = a;
    for (std::uint64_t n = 1; n < q_; ++n) {
      if (x == 1)
        return n;
      if (x == 0)
        return 0;
      x = mul(x, a);
    }
    return 0;
  }

  std::uint64_t p_ = 0;
  std::uint64_t q_ = 0;
  std::size_t k_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::uint64_t primitive_ = 1;
};

using Matrix2 = std::array<std::uint64_t, 4>; // row-major over F_3

// x -> Ax + b on the 9 points of the affine plane over F_3, (x, y) at
// point x + 3y + 1; the translation by (1, 0) is always included.
GeneratedGroup affine_plane_f3(std::vector<Matrix2> const &matrices)
{
  auto linear = [](Matrix2 const &m) {
    return from_map(9, [&](Point pt) {
      std::uint64_t x = pt % 3, y = pt / 3;
      std::uint64_t nx = (m[0] * x + m[1] * y) % 3;
      std::uint64_t ny = (m[2] * x + m[3] * y) % 3;
      return static_cast<Point>(nx + 3 * ny);
    });
  };
  std::vector<Permutation> gens{
    from_map(9, [](Point pt) { return static_cast<Point>((pt % 3 + 1) % 3 + 3 * (pt / 3)); })};
  for (auto const &m : matrices)
    gens.push_back(linear(m));
  return GeneratedGroup(std::move(gens));
}

std::uint64_t factorial(std::uint64_t n)
{
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace

GeneratedGroup cyclic_group(std::size_t n)
{
  if (n == 0)
    throw PreconditionError("cyclic group needs n >= 1");
  return GeneratedGroup({from_map(n, [n](Point x) { return static_cast<Point>((x + 1) % n); })});
}

GeneratedGroup dihedral_group(std::size_t n)
{
  if (n < 3)
    throw PreconditionError("dihedral group needs n >= 3");
  return GeneratedGroup(
    {from_map(n, [n](Point x) { return static_cast<Point>((x + 1) % n); }),
     from_map(n, [n](Point x) { return static_cast<Point>((n - x) % n); })});
}

GeneratedGroup symmetric_group(std::size_t n)
{
  if (n < 2)
    return GeneratedGroup::trivial(1);
  return GeneratedGroup(
    {from_map(n, [](Point x) { return x < 2 ? 1 - x : x; }),
     from_map(n, [n](Point x) { return static_cast<Point>((x + 1) % n); })});
}

GeneratedGroup alternating_group(std::size_t n)
{
  if (n < 3)
    return GeneratedGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) {
    // (1 2 k+1)
    gens.push_back(from_map(n, [k](Point x) -> Point {
      if (x == 0)
        return 1;
      if (x == 1)
        return k;
      return x == k ? 0 : x;
    }));
  }
  return GeneratedGroup(std::move(gens));
}

GeneratedGroup elementary_abelian_group(std::uint64_t p, std::size_t k)
{
  if (!is_prime(p) || k == 0)
    throw PreconditionError("elementary abelian group needs a prime and k >= 1");
  std::size_t degree = p * k;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i) {
    gens.push_back(from_map(degree, [p, i](Point x) -> Point {
      if (x / p != i)
        return x;
      return static_cast<Point>(i * p + (x % p + 1) % p);
    }));
  }
  return GeneratedGroup(std::move(gens));
}

GeneratedGroup direct_product(GeneratedGroup const &a, GeneratedGroup const &b)
{
  std::size_t da = a.degree(), degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (auto const &x : a.generators())
    gens.push_back(from_map(degree, [&](Point p) { return p < da ? x[p] : p; }));
  for (auto const &y : b.generators())
    gens.push_back(from_map(degree, [&](Point p) {
      return p < da ? p : static_cast<Point>(da + y[p - da]);
    }));
  return GeneratedGroup(std::move(gens), a.order() * b.order());
}

GeneratedGroup affine_line_group(std::uint64_t q)
{
  FiniteField f(q);
  std::vector<Permutation> gens;
  std::uint64_t basis = 1;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    gens.push_back(from_map(q, [&](Point x) { return static_cast<Point>(f.add(x, basis)); }));
    basis *= f.characteristic();
  }
  if (q > 2)
    gens.push_back(
      from_map(q, [&](Point x) { return static_cast<Point>(f.mul(x, f.primitive())); }));
  return GeneratedGroup(std::move(gens), FactoredInteger(q * (q - 1)));
}

GeneratedGroup sl2_3()
{
  // Nonzero (x, y) at point x + 3y (1..8).
  auto act = [](Matrix2 const &m) {
    return from_map(8, [&](Point pt) {
      std::uint64_t v = pt + 1, x = v % 3, y = v / 3;
      std::uint64_t nx = (m[0] * x + m[1] * y) % 3;
      std::uint64_t ny = (m[2] * x + m[3] * y) % 3;
      return static_cast<Point>(nx + 3 * ny - 1);
    });
  };
  return GeneratedGroup({act({1, 1, 0, 1}), act({1, 0, 1, 1})}, FactoredInteger(24));
}

GeneratedGroup psl2(std::uint64_t q)
{
  if (!is_prime(q) || q < 5)
    throw PreconditionError("psl2 supports odd primes q >= 5");
  std::uint64_t t = 2;
  while (true) {
    bool primitive = true;
    for (auto r : FactoredInteger(q - 1).primes())
      if (mod_pow(t, (q - 1) / r, q) == 1)
        primitive = false;
    if (primitive)
      break;
    ++t;
  }
  // x -> t^2 x: multiplying by a primitive element itself lies in PGL, not PSL.
  std::uint64_t s = t * t % q;
  Point inf = static_cast<Point>(q);
  std::size_t degree = q + 1;

  auto shift = from_map(degree, [&](Point x) {
    return x == inf ? inf : static_cast<Point>((x + 1) % q);
  });
  auto scale = from_map(degree, [&](Point x) {
    return x == inf ? inf : static_cast<Point>(x * s % q);
  });
  auto invert = from_map(degree, [&](Point x) -> Point {
    if (x == inf)
      return 0;
    if (x == 0)
      return inf;
    return static_cast<Point>((q - mod_pow(x, q - 2, q)) % q);
  });
  return GeneratedGroup({shift, scale, invert}, FactoredInteger(q * (q * q - 1) / 2));
}

namespace
{

constexpr std::uint64_t kAffF = 7;
constexpr std::size_t kAffDegree = 2401;

// Sum-zero vectors (v1..v5) of F_7^5, stored at v1 + 7 v2 + 49 v3 + 343 v4.
std::array<std::uint64_t, 5> aff_decode(Point pt)
{
  std::array<std::uint64_t, 5> v{};
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    v[i] = pt % kAffF;
    pt /= kAffF;
    sum += v[i];
  }
  v[4] = (kAffF - sum % kAffF) % kAffF;
  return v;
}

Point aff_encode(std::array<std::uint64_t, 5> const &v)
{
  std::uint64_t pt = 0;
  for (std::size_t i = 4; i-- > 0;)
    pt = pt * kAffF + v[i];
  return static_cast<Point>(pt);
}

// Coordinate permutation: coordinate i moves to position sigma[i].
Permutation aff_coordinate_perm(std::array<std::size_t, 5> const &sigma)
{
  return from_map(kAffDegree, [&](Point pt) {
    auto v = aff_decode(pt);
    std::array<std::uint64_t, 5> w{};
    for (std::size_t i = 0; i < 5; ++i)
      w[sigma[i]] = v[i];
    return aff_encode(w);
  });
}

std::vector<Permutation> aff_a5_generators()
{
  return {aff_coordinate_perm({1, 2, 0, 3, 4}), aff_coordinate_perm({1, 2, 3, 4, 0})};
}

} // namespace

GeneratedGroup affine_a5_f7()
{
  auto gens = aff_a5_generators();
  gens.push_back(from_map(kAffDegree, [](Point pt) {
    auto v = aff_decode(pt);
    v[0] = (v[0] + 1) % kAffF;
    v[1] = (v[1] + kAffF - 1) % kAffF;
    return aff_encode(v);
  }));
  return GeneratedGroup(std::move(gens), FactoredInteger(144060));
}

GeneratedGroup affine_a5_f7_point_stabilizer()
{
  return GeneratedGroup(aff_a5_generators(), FactoredInteger(60));
}

GeneratedGroup s4_inside_psl217(std::uint64_t seed)
{
  auto g = build("PSL2_17");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t order) {
    for (;;) {
      auto x = g.random_element(rng);
      if (x.order() == order)
        return x;
    }
  };

  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto a = draw(2);
    auto b = draw(3);
    if (compose(a, b).order() != 4)
      continue;
    GeneratedGroup h({a, b});
    if (h.size() != 24)
      continue;
    std::map<std::uint64_t, int> histogram;
    for (auto const &x : h.elements())
      ++histogram[x.order()];
    if (histogram == std::map<std::uint64_t, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}})
      return h;
  }
  throw ResourceError("no S4 found in PSL(2,17) within the search budget");
}

std::vector<CatalogEntry> const &catalog()
{
  static std::vector<CatalogEntry> const entries = [] {
    std::vector<CatalogEntry> e;
    auto add = [&](std::string name, std::uint64_t order, std::set<std::string> tags,
                   std::function<GeneratedGroup()> builder) {
      e.push_back({std::move(name), FactoredInteger(order), std::move(tags),
                   std::move(builder), nullptr});
    };
    std::set<std::string> const nil{"solvable", "nilpotent"};
    std::set<std::string> const sol{"solvable"};
    std::set<std::string> const non{"nonsolvable"};

    for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 30})
      add("C" + std::to_string(n), n, nil, [n] { return cyclic_group(n); });
    for (std::size_t n : {3, 4, 5, 6, 7, 8, 9, 10}) {
      bool two_power = (n & (n - 1)) == 0;
      add("D" + std::to_string(2 * n), 2 * n, two_power ? nil : sol,
          [n] { return dihedral_group(n); });
    }
    add("Q8", 8, nil, [] {
      return GeneratedGroup({Permutation::parse("(1 2 3 4)(5 6 7 8)", 8),
                             Permutation::parse("(1 5 3 7)(2 8 4 6)", 8)});
    });
    add("SL2_3", 24, sol, [] { return sl2_3(); });
    for (std::size_t n = 2; n <= 8; ++n)
      add("S" + std::to_string(n), factorial(n), n <= 2 ? nil : n <= 4 ? sol : non,
          [n] { return symmetric_group(n); });
    for (std::size_t n = 3; n <= 8; ++n)
      add("A" + std::to_string(n), factorial(n) / 2, n == 3 ? nil : n == 4 ? sol : non,
          [n] { return alternating_group(n); });
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, std::size_t>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
      std::uint64_t order = 1;
      for (std::size_t i = 0; i < k; ++i)
        order *= p;
      add("E" + std::to_string(p) + "_" + std::to_string(k), order, nil,
          [p, k] { return elementary_abelian_group(p, k); });
    }
    for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 31})
      add("AGL1_" + std::to_string(q), q * (q - 1), sol, [q] { return affine_line_group(q); });
    add("E3_2:C4", 36, sol, [] { return affine_plane_f3({{0, 1, 2, 0}}); });
    add("E3_2:Q8", 72, sol, [] { return affine_plane_f3({{0, 1, 2, 0}, {1, 1, 1, 2}}); });
    add("AGL2_3", 432, sol,
        [] { return affine_plane_f3({{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 0, 0, 1}}); });

    add("C2xS3", 12, sol, [] { return direct_product(cyclic_group(2), symmetric_group(3)); });
    add("C3xS3", 18, sol, [] { return direct_product(cyclic_group(3), symmetric_group(3)); });
    add("S3xS3", 36, sol, [] { return direct_product(symmetric_group(3), symmetric_group(3)); });
    add("A4xC2", 24, sol, [] { return direct_product(alternating_group(4), cyclic_group(2)); });
    add("A4xC3", 36, sol, [] { return direct_product(alternating_group(4), cyclic_group(3)); });
    add("S4xC2", 48, sol, [] { return direct_product(symmetric_group(4), cyclic_group(2)); });
    add("S4xC3", 72, sol, [] { return direct_product(symmetric_group(4), cyclic_group(3)); });
    add("D8xC3", 24, nil, [] { return direct_product(dihedral_group(4), cyclic_group(3)); });
    add("AGL1_5xC3", 60, sol, [] { return direct_product(affine_line_group(5), cyclic_group(3)); });
    add("S3xAGL1_5", 120, sol,
        [] { return direct_product(symmetric_group(3), affine_line_group(5)); });

    for (std::uint64_t q : {5, 7, 11, 13, 17})
      add("PSL2_" + std::to_string(q), q * (q * q - 1) / 2, non, [q] { return psl2(q); });
    e.back().supplied_maximals = [](GeneratedGroup const &) {
      return std::vector<GeneratedGroup>{s4_inside_psl217()};
    };
    add("AffA5_F7", 144060, {"nonsolvable", "pi_solvable_demo"}, [] { return affine_a5_f7(); });
    e.back().supplied_maximals = [](GeneratedGroup const &) {
      return std::vector<GeneratedGroup>{affine_a5_f7_point_stabilizer()};
    };
    return e;
  }();
  return entries;
}

CatalogEntry const &catalog_entry(std::string const &name)
{
  for (auto const &e : catalog())
    if (e.name == name)
      return e;
  throw UnknownName("unknown catalog group: " + name);
}

GeneratedGroup build(std::string const &name)
{
  static std::mutex mutex;
  static std::map<std::string, GeneratedGroup> built;

  auto const &entry = catalog_entry(name);
  {
    std::lock_guard lock(mutex);
    if (auto it = built.find(name); it != built.end())
      return it->second;
  }
  auto g = entry.builder();
  if (!(g.order() == entry.expected_order))
    throw PreconditionError("catalog group " + name + " has order " + g.order().str()
                            + ", expected " + entry.expected_order.str());
  std::lock_guard lock(mutex);
  return built.emplace(name, std::move(g)).first->second;
}

std::optional<std::vector<GeneratedGroup>> supplied_maximals(std::string const &name)
{
  auto const &entry = catalog_entry(name);
  if (!entry.supplied_maximals)
    return std::nullopt;
  static std::mutex mutex;
  static std::map<std::string, std::vector<GeneratedGroup>> computed;
  {
    std::lock_guard lock(mutex);
    if (auto it = computed.find(name); it != computed.end())
      return it->second;
  }
  auto list = entry.supplied_maximals(build(name));
  std::lock_guard lock(mutex);
  return computed.emplace(name, std::move(list)).first->second;
}

namespace
{

std::string trim(std::string const &s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_number(std::string const &text, std::size_t line)
{
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(line, "expected a non-negative integer, got '" + text + "'");
  return value;
}

} // namespace

GroupSpec parse_group_spec(std::string const &text)
{
  GroupSpec spec;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool have_degree = false;

  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    auto content = trim(raw);
    if (content.empty())
      continue;

    auto space = content.find_first_of(" \t");
    auto keyword = content.substr(0, space);
    auto rest = space == std::string::npos ? std::string{} : trim(content.substr(space));

    if (keyword == "name") {
      if (rest.empty())
        throw ParseError(line, "empty name");
      spec.name = rest;
    } else if (keyword == "degree") {
      if (have_degree)
        throw ParseError(line, "duplicate degree line");
      spec.degree = parse_number(rest, line);
      if (spec.degree == 0)
        throw ParseError(line, "degree must be positive");
      have_degree = true;
    } else if (keyword == "expect-order") {
      spec.expected_order = parse_number(rest, line);
      if (*spec.expected_order == 0)
        throw ParseError(line, "expected order must be positive");
    } else if (keyword == "gen") {
      if (!have_degree)
        throw ParseError(line, "gen line before the degree line");
      try {
        spec.generators.push_back(Permutation::parse(rest, spec.degree));
      } catch (Error const &e) {
        throw ParseError(line, e.what());
      }
    } else {
      throw ParseError(line, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_degree)
    throw ParseError(line, "missing degree line");
  return spec;
}

std::string print_group_spec(GroupSpec const &spec)
{
  std::string out;
  if (spec.name)
    out += "name " + *spec.name + "\n";
  out += "degree " + std::to_string(spec.degree) + "\n";
  if (spec.expected_order)
    out += "expect-order " + std::to_string(*spec.expected_order) + "\n";
  for (auto const &g : spec.generators)
    out += "gen " + g.str() + "\n";
  return out;
}

GeneratedGroup group_from_spec(GroupSpec const &spec)
{
  GeneratedGroup g = spec.generators.empty() ? GeneratedGroup::trivial(spec.degree)
                                             : GeneratedGroup(spec.generators);
  if (spec.expected_order && g.size() != *spec.expected_order)
    throw PreconditionError("group has order " + std::to_string(g.size())
                            + " but the file expects " + std::to_string(*spec.expected_order));
  return g;
}

GeneratedGroup parse_group_file(std::string const &text)
{
  return group_from_spec(parse_group_spec(text));
}

std::string print_group_file(GeneratedGroup const &g, std::optional<std::string> const &name)
{
  GroupSpec spec;
  spec.name = name;
  spec.degree = g.degree();
  spec.expected_order = g.size();
  for (auto const &x : g.generators())
    if (!x.is_identity())
      spec.generators.push_back(x);
  return print_group_spec(spec);
}

} // namespace maxnorm
