#ifndef MAXNORM_GROUP_HPP
#define MAXNORM_GROUP_HPP

#include <any>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "maxnorm/arith.hpp"
#include "maxnorm/perm.hpp"

namespace maxnorm
{

/// Default cap on element enumeration.
inline constexpr std::uint64_t kDefaultElementCap = 5000;

/**
 * One level of a stabilizer chain: the basic orbit of `base` under the
 * strong generators fixing all earlier base points, stored as a Schreier
 * vector (label[x] = index of the generator that first reached x, -2 for
 * the base point itself, -1 for points outside the orbit).
 */
struct ChainLevel
{
  Point base = 0;
  std::vector<Permutation> gens;
  std::vector<Permutation> gens_inv;
  std::vector<std::int32_t> label;
  std::vector<Point> orbit;
};

class StabChain
{
public:
  explicit StabChain(std::size_t degree) : degree_(degree) {}

  /// Deterministic Schreier-Sims; base points are the smallest moved
  /// points at each level.
  void build(std::vector<Permutation> const &gens);

  /// Randomized Schreier-Sims that stops once the chain reaches
  /// `target_order`; falls back to the deterministic completion if the
  /// random phase stalls. Throws PreconditionError if the target is wrong.
  void build_with_order(std::vector<Permutation> const &gens,
                        std::uint64_t target_order, std::uint64_t seed);

  /// Adds a generator to a complete chain and restores completeness.
  void add_generator(Permutation const &g);

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  ChainLevel const &level(std::size_t i) const { return levels_[i]; }

  /// Strips g through the chain from level `from`; returns the residue
  /// and the level at which stripping stopped (depth() if it passed all).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;

  bool contains(Permutation const &g) const;

  /// The coset representative u with u(base_i) = point.
  Permutation transversal(std::size_t i, Point point) const;

  /// Multiplies g on the right by u_point^-1 for the level-i transversal.
  Permutation strip_level(Permutation g, std::size_t i) const;

  FactoredInteger order() const;

private:
  void add_level(Point base);
  void add_strong_generator(Permutation const &g, std::size_t first, std::size_t last);
  void recompute_orbit(std::size_t i);
  void complete_from(std::size_t start);

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

/// Thread-safe memo table for expensive derived data of a group.
class GroupCache
{
public:
  template<typename T, typename F>
  T get_or_compute(std::string const &key, F &&compute)
  {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end())
        return std::any_cast<T>(it->second);
    }
    T value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.emplace(key, value);
    return value;
  }

private:
  std::mutex mutex_;
  std::map<std::string, std::any> entries_;
};

/**
 * A permutation group given by generators together with a complete
 * stabilizer chain. Immutable after construction and cheap to copy (the
 * chain is shared).
 */
class GeneratedGroup
{
public:
  /// Throws PreconditionError for an empty list, DegreeMismatch for mixed degrees.
  explicit GeneratedGroup(std::vector<Permutation> generators);

  /// Uses the known order to stop Schreier-Sims early.
  GeneratedGroup(std::vector<Permutation> generators,
                 FactoredInteger const &known_order, std::uint64_t seed = 0);

  static GeneratedGroup trivial(std::size_t degree);

  /// <this, extra>, extending the existing chain.
  GeneratedGroup with(std::vector<Permutation> const &extra) const;

  std::size_t degree() const { return chain_->degree(); }
  std::vector<Permutation> const &generators() const { return gens_; }
  FactoredInteger const &order() const { return order_; }
  std::uint64_t size() const { return order_.value(); }
  bool is_trivial() const { return order_.value() == 1; }

  bool contains(Permutation const &g) const;

  /// Orbit of a 0-based point, sorted.
  std::vector<Point> orbit(Point point) const;

  std::vector<Point> base() const;
  StabChain const &chain() const { return *chain_; }

  /// All elements; throws ResourceError if the order exceeds `cap`.
  std::vector<Permutation> elements(std::uint64_t cap = kDefaultElementCap) const;

  /// Streams every element exactly once, in a fixed order.
  void for_each_element(std::function<void(Permutation const &)> const &fn) const;

  /// Uniformly distributed; identical seeds give identical results.
  Permutation random_element(std::uint64_t seed) const;
  Permutation random_element(std::mt19937_64 &rng) const;

  /// The lexicographically least element of the right coset H*g, where H
  /// is this group (compared on the images of this group's base).
  Permutation canonical_coset_rep(Permutation g) const;

  GroupCache &cache() const { return *cache_; }

private:
  GeneratedGroup(std::vector<Permutation> gens,
                 std::shared_ptr<StabChain const> chain);

  std::vector<Permutation> gens_;
  std::shared_ptr<StabChain const> chain_;
  FactoredInteger order_;
  std::shared_ptr<GroupCache> cache_;
};

/// Uniform draw from [0, n) that does not depend on the standard library's
/// distribution implementation.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n);

bool is_subgroup(GeneratedGroup const &h, GeneratedGroup const &g);
bool equal_groups(GeneratedGroup const &a, GeneratedGroup const &b);

/// True iff every generator of `g` normalizes `h`.
bool is_normal(GeneratedGroup const &h, GeneratedGroup const &g);

/// <h^g : h a generator of H>.
GeneratedGroup conjugate_subgroup(GeneratedGroup const &h, Permutation const &g);

/// Order-independent fingerprint of the element set (enumerates the group).
SetKey subgroup_key(GeneratedGroup const &h);

} // namespace maxnorm

#endif // MAXNORM_GROUP_HPP
