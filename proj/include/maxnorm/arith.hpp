#ifndef MAXNORM_ARITH_HPP
#define MAXNORM_ARITH_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace maxnorm
{

bool is_prime(std::uint64_t n);

/// A positive integer together with its prime factorization.
class FactoredInteger
{
public:
  FactoredInteger() = default;
  explicit FactoredInteger(std::uint64_t value);
  explicit FactoredInteger(std::map<std::uint64_t, unsigned> factorization);

  std::uint64_t value() const { return value_; }
  std::map<std::uint64_t, unsigned> const &factorization() const
  { return factors_; }

  unsigned exponent(std::uint64_t p) const;
  std::vector<std::uint64_t> primes() const;

  /// Largest divisor that is a power of p.
  std::uint64_t p_part(std::uint64_t p) const;

  bool is_prime_power() const { return factors_.size() <= 1; }

  FactoredInteger operator*(FactoredInteger const &other) const;

  /// Exact division; throws PreconditionError if `other` does not divide.
  FactoredInteger operator/(FactoredInteger const &other) const;

  /// "24 = {2:3, 3:1}".
  std::string str() const;

  friend bool operator==(FactoredInteger const &a, FactoredInteger const &b)
  { return a.value_ == b.value_; }

private:
  std::uint64_t value_ = 1;
  std::map<std::uint64_t, unsigned> factors_;
};

/// A finite set of primes; the complement is always taken relative to an
/// explicit universe (usually the prime divisors of a group order).
class PrimeSet
{
public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<std::uint64_t> primes);
  explicit PrimeSet(std::set<std::uint64_t> primes);

  static PrimeSet of(FactoredInteger const &n);

  std::set<std::uint64_t> const &primes() const { return primes_; }
  bool contains(std::uint64_t p) const { return primes_.count(p) != 0; }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }

  /// Primes of `universe` not in this set.
  PrimeSet complement_in(FactoredInteger const &universe) const;

  bool is_pi_number(FactoredInteger const &n) const;
  std::uint64_t pi_part(FactoredInteger const &n) const;

  /// Every non-empty subset, ordered by size then lexicographically.
  std::vector<PrimeSet> nonempty_subsets() const;

  /// "{2,3}".
  std::string str() const;

  friend bool operator==(PrimeSet const &, PrimeSet const &) = default;
  friend auto operator<=>(PrimeSet const &, PrimeSet const &) = default;

private:
  std::set<std::uint64_t> primes_;
};

/// Parses "2,3,5".
PrimeSet parse_prime_set(std::string const &text);

} // namespace maxnorm

#endif // MAXNORM_ARITH_HPP
