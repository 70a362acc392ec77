#include "maxnorm/group.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

#include "maxnorm/errors.hpp"

namespace maxnorm
{

namespace
{

// Per-level bookkeeping for the deterministic completion: Schreier
// generators (orbit[i], gens[j]) with i < orbit_done and j < gens_done have
// already been shown to sift to the identity.
struct Progress
{
  std::size_t orbit_done = 0;
  std::size_t gens_done = 0;
};

// Explicit transversal of a level, indexed like level.orbit.
std::vector<Permutation> explicit_transversal(ChainLevel const &level,
                                              std::size_t degree)
{
  std::vector<Permutation> result;
  result.reserve(level.orbit.size());

  std::vector<std::size_t> position(degree, 0);
  for (std::size_t i = 0; i < level.orbit.size(); ++i)
    position[level.orbit[i]] = i;

  result.emplace_back(degree);
  for (std::size_t i = 1; i < level.orbit.size(); ++i) {
    Point x = level.orbit[i];
    auto label = static_cast<std::size_t>(level.label[x]);
    Point parent = level.gens_inv[label][x];
    result.push_back(result[position[parent]] * level.gens[label]);
  }
  return result;
}

class ProductReplacement
{
public:
  ProductReplacement(std::vector<Permutation> const &gens, std::uint64_t seed)
  : rng_(seed), acc_(gens.front().degree())
  {
    while (slots_.size() < 10)
      slots_.insert(slots_.end(), gens.begin(), gens.end());
    for (int i = 0; i < 50; ++i)
      next();
  }

  Permutation next()
  {
    auto n = slots_.size();
    auto i = uniform_below(rng_, n);
    auto j = uniform_below(rng_, n - 1);
    if (j >= i)
      ++j;
    if (uniform_below(rng_, 2))
      slots_[i] = slots_[i] * slots_[j];
    else
      slots_[i] = slots_[i] * inverse(slots_[j]);
    acc_ = acc_ * slots_[i];
    return acc_;
  }

private:
  std::mt19937_64 rng_;
  std::vector<Permutation> slots_;
  Permutation acc_;
};

} // namespace

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n)
{
  assert(n > 0);
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit)
      return r % n;
  }
}

void StabChain::add_level(Point base)
{
  ChainLevel level;
  level.base = base;
  level.label.assign(degree_, -1);
  level.label[base] = -2;
  level.orbit.push_back(base);
  levels_.push_back(std::move(level));
}

void StabChain::add_strong_generator(Permutation const &g, std::size_t first,
                                     std::size_t last)
{
  Permutation g_inv = inverse(g);
  for (std::size_t i = first; i <= last; ++i) {
    levels_[i].gens.push_back(g);
    levels_[i].gens_inv.push_back(g_inv);
    recompute_orbit(i);
  }
}

// Extends the orbit in place. Labels of points already in the orbit never
// change, so transversal elements stay stable as the chain grows.
void StabChain::recompute_orbit(std::size_t i)
{
  auto &level = levels_[i];
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point x = level.orbit[k];
    for (std::size_t j = 0; j < level.gens.size(); ++j) {
      Point y = level.gens[j][x];
      if (level.label[y] == -1) {
        level.label[y] = static_cast<std::int32_t>(j);
        level.orbit.push_back(y);
      }
    }
  }
}

Permutation StabChain::transversal(std::size_t i, Point point) const
{
  auto const &level = levels_[i];
  std::vector<std::size_t> path;
  for (Point x = point; level.label[x] != -2;) {
    auto label = static_cast<std::size_t>(level.label[x]);
    path.push_back(label);
    x = level.gens_inv[label][x];
  }

  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = u * level.gens[*it];
  return u;
}

Permutation StabChain::strip_level(Permutation g, std::size_t i) const
{
  auto const &level = levels_[i];
  std::vector<Point> images = g.images();
  Point x = images[level.base];
  while (level.label[x] != -2) {
    auto const &inv = level.gens_inv[static_cast<std::size_t>(level.label[x])];
    for (auto &y : images)
      y = inv[y];
    x = images[level.base];
  }
  return Permutation::unchecked(std::move(images));
}

std::pair<Permutation, std::size_t> StabChain::sift(Permutation g,
                                                    std::size_t from) const
{
  for (std::size_t i = from; i < levels_.size(); ++i) {
    if (levels_[i].label[g[levels_[i].base]] == -1)
      return {std::move(g), i};
    g = strip_level(std::move(g), i);
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(Permutation const &g) const
{
  if (g.degree() != degree_)
    throw DegreeMismatch(g.degree(), degree_);
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

FactoredInteger StabChain::order() const
{
  FactoredInteger result(1);
  for (auto const &level : levels_)
    result = result * FactoredInteger(level.orbit.size());
  return result;
}

void StabChain::complete_from(std::size_t start)
{
  std::vector<Progress> progress(levels_.size());
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);

  while (i >= 0) {
    auto li = static_cast<std::size_t>(i);
    if (progress.size() < levels_.size())
      progress.resize(levels_.size());

    auto transversal_i = explicit_transversal(levels_[li], degree_);
    std::vector<std::size_t> position(degree_, 0);
    for (std::size_t k = 0; k < levels_[li].orbit.size(); ++k)
      position[levels_[li].orbit[k]] = k;

    bool restarted = false;
    auto const orbit_size = levels_[li].orbit.size();
    auto const gens_size = levels_[li].gens.size();

    for (std::size_t oi = 0; oi < orbit_size && !restarted; ++oi) {
      for (std::size_t xi = 0; xi < gens_size; ++xi) {
        if (oi < progress[li].orbit_done && xi < progress[li].gens_done)
          continue;

        auto const &level = levels_[li];
        Point beta = level.orbit[oi];
        Point gamma = level.gens[xi][beta];

        // Tree edges give trivial Schreier generators.
        if (level.label[gamma] == static_cast<std::int32_t>(xi)
            && level.gens_inv[xi][gamma] == beta) {
          continue;
        }

        Permutation h = transversal_i[oi] * level.gens[xi]
                        * inverse(transversal_i[position[gamma]]);
        if (h.is_identity())
          continue;

        auto [residue, j] = sift(std::move(h), li + 1);
        if (j == levels_.size() && residue.is_identity())
          continue;

        if (j == levels_.size())
          add_level(residue.smallest_moved_point());
        add_strong_generator(residue, li + 1, j);

        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }

    if (!restarted) {
      progress[li].orbit_done = orbit_size;
      progress[li].gens_done = gens_size;
      --i;
    }
  }
}

void StabChain::build(std::vector<Permutation> const &gens)
{
  levels_.clear();

  for (auto const &g : gens) {
    if (g.degree() != degree_)
      throw DegreeMismatch(g.degree(), degree_);
    if (!g.is_identity())
      add_generator(g);
  }
}

void StabChain::add_generator(Permutation const &g)
{
  if (g.degree() != degree_)
    throw DegreeMismatch(g.degree(), degree_);
  if (contains(g))
    return;

  std::size_t m = 0;
  while (m < levels_.size() && g[levels_[m].base] == levels_[m].base)
    ++m;
  if (m == levels_.size())
    add_level(g.smallest_moved_point());

  add_strong_generator(g, 0, m);
  complete_from(m);
}

void StabChain::build_with_order(std::vector<Permutation> const &gens,
                                 std::uint64_t target_order, std::uint64_t seed)
{
  levels_.clear();

  std::vector<Permutation> nontrivial;
  for (auto const &g : gens) {
    if (g.degree() != degree_)
      throw DegreeMismatch(g.degree(), degree_);
    if (!g.is_identity())
      nontrivial.push_back(g);
  }
  if (nontrivial.empty()) {
    if (target_order != 1)
      throw PreconditionError("known order does not match the trivial group");
    return;
  }

  auto insert = [&](Permutation const &g) {
    auto [residue, j] = sift(g);
    if (j == levels_.size() && residue.is_identity())
      return;
    if (j == levels_.size())
      add_level(residue.smallest_moved_point());
    add_strong_generator(residue, 0, j);
  };

  for (auto const &g : nontrivial)
    insert(g);

  ProductReplacement pr(nontrivial, seed);
  std::size_t stale = 0;
  while (order().value() < target_order && stale < 200) {
    auto before = order().value();
    insert(pr.next());
    stale = order().value() == before ? stale + 1 : 0;
  }

  if (order().value() != target_order) {
    // The random phase stalled (or the target is wrong); finish exactly.
    complete_from(levels_.size() - 1);
    if (order().value() != target_order)
      throw PreconditionError("known order " + std::to_string(target_order)
                              + " does not match computed order "
                              + std::to_string(order().value()));
  }
}

GeneratedGroup::GeneratedGroup(std::vector<Permutation> gens,
                               std::shared_ptr<StabChain const> chain)
: gens_(std::move(gens)), chain_(std::move(chain)), order_(chain_->order()),
  cache_(std::make_shared<GroupCache>())
{}

namespace
{

std::vector<Permutation> normalize_generators(std::vector<Permutation> gens)
{
  if (gens.empty())
    throw PreconditionError("a generated group needs at least one generator");

  auto degree = gens.front().degree();
  if (degree == 0)
    throw PreconditionError("degree must be positive");

  std::vector<Permutation> result;
  std::unordered_set<Permutation> seen;
  for (auto &g : gens) {
    if (g.degree() != degree)
      throw DegreeMismatch(degree, g.degree());
    if (!g.is_identity() && seen.insert(g).second)
      result.push_back(std::move(g));
  }
  if (result.empty())
    result.emplace_back(degree);
  return result;
}

} // namespace

GeneratedGroup::GeneratedGroup(std::vector<Permutation> generators)
: gens_(normalize_generators(std::move(generators))),
  cache_(std::make_shared<GroupCache>())
{
  auto chain = std::make_shared<StabChain>(gens_.front().degree());
  chain->build(gens_);
  chain_ = std::move(chain);
  order_ = chain_->order();
}

GeneratedGroup GeneratedGroup::trivial(std::size_t degree)
{
  return GeneratedGroup({Permutation(degree)});
}

GeneratedGroup::GeneratedGroup(std::vector<Permutation> generators,
                               FactoredInteger const &known_order,
                               std::uint64_t seed)
: gens_(normalize_generators(std::move(generators))),
  cache_(std::make_shared<GroupCache>())
{
  auto chain = std::make_shared<StabChain>(gens_.front().degree());
  chain->build_with_order(gens_, known_order.value(), seed);
  chain_ = std::move(chain);
  order_ = chain_->order();
}

GeneratedGroup GeneratedGroup::with(std::vector<Permutation> const &extra) const
{
  auto chain = std::make_shared<StabChain>(*chain_);
  auto gens = gens_;
  if (gens.size() == 1 && gens.front().is_identity())
    gens.clear();

  for (auto const &g : extra) {
    if (g.degree() != degree())
      throw DegreeMismatch(degree(), g.degree());
    if (g.is_identity() || chain->contains(g))
      continue;
    chain->add_generator(g);
    gens.push_back(g);
  }

  if (gens.empty())
    gens.emplace_back(degree());
  return GeneratedGroup(std::move(gens), std::move(chain));
}

bool GeneratedGroup::contains(Permutation const &g) const
{
  return chain_->contains(g);
}

std::vector<Point> GeneratedGroup::orbit(Point point) const
{
  if (point >= degree())
    throw PreconditionError("point " + std::to_string(point + 1)
                            + " outside 1.." + std::to_string(degree()));

  std::vector<bool> seen(degree(), false);
  std::vector<Point> result{point};
  seen[point] = true;
  for (std::size_t k = 0; k < result.size(); ++k) {
    for (auto const &g : gens_) {
      Point y = g[result[k]];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Point> GeneratedGroup::base() const
{
  std::vector<Point> result;
  for (std::size_t i = 0; i < chain_->depth(); ++i)
    result.push_back(chain_->level(i).base);
  return result;
}

void GeneratedGroup::for_each_element(
  std::function<void(Permutation const &)> const &fn) const
{
  auto const depth = chain_->depth();
  if (depth == 0) {
    fn(Permutation(degree()));
    return;
  }

  std::vector<std::vector<Permutation>> transversals;
  for (std::size_t i = 0; i < depth; ++i)
    transversals.push_back(explicit_transversal(chain_->level(i), degree()));

  // Elements are u_{k-1} * ... * u_0 with u_i from the level-i transversal.
  std::function<void(std::size_t, Permutation const &)> rec =
    [&](std::size_t level, Permutation const &prefix) {
      for (auto const &u : transversals[level]) {
        Permutation next = prefix * u;
        if (level == 0)
          fn(next);
        else
          rec(level - 1, next);
      }
    };
  rec(depth - 1, Permutation(degree()));
}

std::vector<Permutation> GeneratedGroup::elements(std::uint64_t cap) const
{
  if (size() > cap)
    throw ResourceError("group order " + std::to_string(size())
                        + " exceeds element cap " + std::to_string(cap));

  std::vector<Permutation> result;
  result.reserve(size());
  for_each_element([&](Permutation const &g) { result.push_back(g); });
  return result;
}

Permutation GeneratedGroup::random_element(std::mt19937_64 &rng) const
{
  Permutation g(degree());
  for (std::size_t i = chain_->depth(); i-- > 0;) {
    auto const &level = chain_->level(i);
    Point beta = level.orbit[uniform_below(rng, level.orbit.size())];
    g = g * chain_->transversal(i, beta);
  }
  return g;
}

Permutation GeneratedGroup::random_element(std::uint64_t seed) const
{
  std::mt19937_64 rng(seed);
  return random_element(rng);
}

Permutation GeneratedGroup::canonical_coset_rep(Permutation g) const
{
  if (g.degree() != degree())
    throw DegreeMismatch(g.degree(), degree());

  for (std::size_t i = 0; i < chain_->depth(); ++i) {
    auto const &level = chain_->level(i);
    Point best = level.orbit.front();
    for (Point beta : level.orbit) {
      if (g[beta] < g[best])
        best = beta;
    }
    if (best != level.base)
      g = chain_->transversal(i, best) * g;
  }
  return g;
}

bool is_subgroup(GeneratedGroup const &h, GeneratedGroup const &g)
{
  if (h.degree() != g.degree())
    throw DegreeMismatch(h.degree(), g.degree());
  if (g.size() % h.size() != 0)
    return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](Permutation const &x) { return g.contains(x); });
}

bool equal_groups(GeneratedGroup const &a, GeneratedGroup const &b)
{
  return a.size() == b.size() && is_subgroup(a, b);
}

bool is_normal(GeneratedGroup const &h, GeneratedGroup const &g)
{
  for (auto const &x : g.generators()) {
    for (auto const &y : h.generators()) {
      if (!h.contains(conjugate(y, x)))
        return false;
    }
  }
  return true;
}

GeneratedGroup conjugate_subgroup(GeneratedGroup const &h, Permutation const &g)
{
  std::vector<Permutation> gens;
  for (auto const &x : h.generators())
    gens.push_back(conjugate(x, g));
  return GeneratedGroup(std::move(gens), h.order());
}

SetKey subgroup_key(GeneratedGroup const &h)
{
  SetKey key;
  h.for_each_element([&](Permutation const &x) { key.add(x); });
  return key;
}

} // namespace maxnorm
