#include "maxnorm/arith.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "maxnorm/errors.hpp"

namespace maxnorm
{

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

FactoredInteger::FactoredInteger(std::uint64_t value)
: value_(value)
{
  if (value == 0)
    throw PreconditionError("FactoredInteger requires a positive value");

  for (std::uint64_t d = 2; d * d <= value; ++d) {
    while (value % d == 0) {
      ++factors_[d];
      value /= d;
    }
  }
  if (value > 1)
    ++factors_[value];
}

FactoredInteger::FactoredInteger(std::map<std::uint64_t, unsigned> factorization)
{
  for (auto [p, e] : factorization) {
    if (!is_prime(p))
      throw PreconditionError(std::to_string(p) + " is not prime");
    if (e == 0)
      continue;
    factors_[p] = e;
    for (unsigned i = 0; i < e; ++i) {
      if (value_ > std::numeric_limits<std::uint64_t>::max() / p)
        throw ResourceError("integer overflows 64 bits");
      value_ *= p;
    }
  }
}

unsigned FactoredInteger::exponent(std::uint64_t p) const
{
  auto it = factors_.find(p);
  return it == factors_.end() ? 0u : it->second;
}

std::vector<std::uint64_t> FactoredInteger::primes() const
{
  std::vector<std::uint64_t> result;
  for (auto const &[p, e] : factors_)
    result.push_back(p);
  return result;
}

std::uint64_t FactoredInteger::p_part(std::uint64_t p) const
{
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent(p); ++i)
    result *= p;
  return result;
}

FactoredInteger FactoredInteger::operator*(FactoredInteger const &other) const
{
  auto f = factors_;
  for (auto [p, e] : other.factors_)
    f[p] += e;
  return FactoredInteger(std::move(f));
}

FactoredInteger FactoredInteger::operator/(FactoredInteger const &other) const
{
  auto f = factors_;
  for (auto [p, e] : other.factors_) {
    if (exponent(p) < e)
      throw PreconditionError(std::to_string(other.value()) + " does not divide "
                              + std::to_string(value_));
    f[p] -= e;
  }
  return FactoredInteger(std::move(f));
}

std::string FactoredInteger::str() const
{
  std::ostringstream os;
  os << value_ << " = {";
  bool first = true;
  for (auto [p, e] : factors_) {
    os << (first ? "" : ", ") << p << ':' << e;
    first = false;
  }
  os << '}';
  return os.str();
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes)
: PrimeSet(std::set<std::uint64_t>(primes))
{}

PrimeSet::PrimeSet(std::set<std::uint64_t> primes)
: primes_(std::move(primes))
{
  for (auto p : primes_) {
    if (!is_prime(p))
      throw PreconditionError(std::to_string(p) + " is not prime");
  }
}

PrimeSet PrimeSet::of(FactoredInteger const &n)
{
  auto ps = n.primes();
  return PrimeSet(std::set<std::uint64_t>(ps.begin(), ps.end()));
}

PrimeSet PrimeSet::complement_in(FactoredInteger const &universe) const
{
  std::set<std::uint64_t> result;
  for (auto p : universe.primes()) {
    if (!contains(p))
      result.insert(p);
  }
  return PrimeSet(std::move(result));
}

bool PrimeSet::is_pi_number(FactoredInteger const &n) const
{
  return std::all_of(n.factorization().begin(), n.factorization().end(),
                     [&](auto const &pe) { return contains(pe.first); });
}

std::uint64_t PrimeSet::pi_part(FactoredInteger const &n) const
{
  std::uint64_t result = 1;
  for (auto p : primes_)
    result *= n.p_part(p);
  return result;
}

std::vector<PrimeSet> PrimeSet::nonempty_subsets() const
{
  std::vector<std::uint64_t> ps(primes_.begin(), primes_.end());
  std::vector<PrimeSet> result;

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ps.size()); ++mask) {
    std::set<std::uint64_t> s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (mask & (std::uint64_t{1} << i))
        s.insert(ps[i]);
    }
    result.emplace_back(std::move(s));
  }

  std::stable_sort(result.begin(), result.end(),
                   [](PrimeSet const &a, PrimeSet const &b) {
                     if (a.size() != b.size())
                       return a.size() < b.size();
                     return a.primes_ < b.primes_;
                   });
  return result;
}

std::string PrimeSet::str() const
{
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto p : primes_) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  os << '}';
  return os.str();
}

PrimeSet parse_prime_set(std::string const &text)
{
  std::set<std::uint64_t> result;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    try {
      std::size_t pos = 0;
      auto v = std::stoull(item, &pos);
      if (pos != item.size())
        throw PreconditionError("bad prime '" + item + "'");
      result.insert(v);
    } catch (std::logic_error const &) {
      throw PreconditionError("bad prime '" + item + "'");
    }
  }
  return PrimeSet(std::move(result));
}

} // namespace maxnorm
