#include "maxnorm/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <unordered_set>

#include "maxnorm/errors.hpp"
#include "maxnorm/structure.hpp"

namespace maxnorm
{

namespace
{

void require_subgroup(GeneratedGroup const &h, GeneratedGroup const &g,
                      char const *op)
{
  if (h.degree() != g.degree())
    throw DegreeMismatch(h.degree(), g.degree());
  if (!is_subgroup(h, g))
    throw PreconditionError(std::string(op) + ": argument is not a subgroup");
}

// Orders a tuple key so that it is not symmetric in its entries.
SetKey tuple_key(std::vector<Permutation> const &xs)
{
  SetKey key;
  std::uint64_t salt = 1;
  for (auto const &x : xs) {
    key.lo = mix64(key.lo ^ x.hash(salt));
    key.hi = mix64(key.hi ^ x.hash(salt + 0x51ed27));
    ++salt;
  }
  return key;
}

std::uint64_t element_cap_for_keys() { return 2000000; }

} // namespace

OrbitStabilizer orbit_stabilizer(
  GeneratedGroup const &g, std::function<SetKey(Permutation const &)> const &key,
  GeneratedGroup const &known_stabilizer, std::uint64_t cap)
{
  struct Edge
  {
    std::size_t from;
    std::size_t gen;
    std::size_t to;
  };

  std::vector<Permutation> transversal{Permutation(g.degree())};
  std::unordered_map<SetKey, std::size_t, SetKeyHash> index;
  index.emplace(key(transversal.front()), 0);
  std::vector<Edge> non_tree;

  for (std::size_t i = 0; i < transversal.size(); ++i) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Permutation ts = transversal[i] * g.generators()[s];
      auto k = key(ts);
      auto it = index.find(k);
      if (it == index.end()) {
        if (transversal.size() >= cap)
          throw ResourceError("orbit exceeds cap " + std::to_string(cap));
        index.emplace(k, transversal.size());
        transversal.push_back(std::move(ts));
      } else {
        non_tree.push_back({i, s, it->second});
      }
    }
  }

  auto target = g.size() / transversal.size();
  GeneratedGroup stab = known_stabilizer;
  for (auto const &e : non_tree) {
    if (stab.size() == target)
      break;
    Permutation schreier = transversal[e.from] * g.generators()[e.gen]
                           * inverse(transversal[e.to]);
    if (!stab.contains(schreier))
      stab = stab.with({schreier});
  }

  if (stab.size() != target)
    throw Error("orbit-stabilizer bookkeeping failed");
  return {std::move(transversal), std::move(stab)};
}

CosetAction::CosetAction(GeneratedGroup const &g, GeneratedGroup const &h,
                         std::uint64_t cap)
: h_(h)
{
  require_subgroup(h, g, "coset action");
  auto index = g.size() / h.size();
  if (index > cap)
    throw ResourceError("index " + std::to_string(index) + " exceeds cap "
                        + std::to_string(cap));

  reps_.push_back(h.canonical_coset_rep(Permutation(g.degree())));
  index_.emplace(reps_.front(), 0);

  auto const &gens = g.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto c = h.canonical_coset_rep(reps_[i] * gens[s]);
      auto [it, inserted] = index_.emplace(c, reps_.size());
      if (inserted)
        reps_.push_back(std::move(c));
      images[s].push_back(static_cast<Point>(it->second));
    }
  }

  for (auto &im : images)
    gen_images_.push_back(Permutation::unchecked(std::move(im)));
}

std::size_t CosetAction::index_of(Permutation const &x) const
{
  auto it = index_.find(h_.canonical_coset_rep(x));
  if (it == index_.end())
    throw PreconditionError("element outside the acting group");
  return it->second;
}

Permutation CosetAction::act(Permutation const &x) const
{
  std::vector<Point> images(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i)
    images[i] = static_cast<Point>(index_of(reps_[i] * x));
  return Permutation::unchecked(std::move(images));
}

Permutation QuotientPresentation::section(Permutation const &xbar) const
{
  if (xbar.degree() != cosets->size())
    throw DegreeMismatch(xbar.degree(), cosets->size());
  return cosets->reps()[xbar[0]];
}

GeneratedGroup QuotientPresentation::project_subgroup(GeneratedGroup const &h) const
{
  std::vector<Permutation> gens;
  for (auto const &x : h.generators())
    gens.push_back(project(x));
  return GeneratedGroup(std::move(gens));
}

QuotientPresentation quotient(GeneratedGroup const &g, GeneratedGroup const &n)
{
  require_subgroup(n, g, "quotient");
  if (!is_normal(n, g))
    throw PreconditionError("quotient: subgroup is not normal");

  auto cosets = std::make_shared<CosetAction const>(g, n);
  GeneratedGroup q(cosets->generator_images(), g.order() / n.order());
  return {g, n, std::move(cosets), std::move(q)};
}

GeneratedGroup preimage(QuotientPresentation const &qp, GeneratedGroup const &hbar)
{
  require_subgroup(hbar, qp.quotient, "preimage");

  std::vector<Permutation> gens = qp.kernel.generators();
  for (auto const &x : hbar.generators())
    gens.push_back(qp.section(x));
  return GeneratedGroup(std::move(gens), hbar.order() * qp.kernel.order());
}

GeneratedGroup centralizer(GeneratedGroup const &g, GeneratedGroup const &h)
{
  require_subgroup(h, g, "centralizer");
  if (h.is_trivial())
    return g;

  auto const &hgens = h.generators();
  auto key = [&](Permutation const &t) {
    std::vector<Permutation> conj;
    conj.reserve(hgens.size());
    for (auto const &x : hgens)
      conj.push_back(conjugate(x, t));
    return tuple_key(conj);
  };
  return orbit_stabilizer(g, key, GeneratedGroup::trivial(g.degree())).stabilizer;
}

OrbitStabilizer subgroup_conjugates(GeneratedGroup const &g, GeneratedGroup const &h,
                                    std::uint64_t cap)
{
  require_subgroup(h, g, "normalizer");
  if (h.size() == g.size() || is_normal(h, g))
    return {{Permutation(g.degree())}, g};

  auto elements = h.elements(element_cap_for_keys());
  auto key = [&](Permutation const &t) {
    SetKey k;
    for (auto const &x : elements)
      k.add(conjugate(x, t));
    return k;
  };
  return orbit_stabilizer(g, key, h, cap);
}

namespace
{

// Unions of the H-orbits of each length, skipping lengths that cover every
// point. N_G(H) permutes the H-orbits, so it stabilizes each union.
std::vector<std::vector<Point>> orbit_length_classes(GeneratedGroup const &h)
{
  auto const n = h.degree();
  std::vector<bool> seen(n, false);
  std::map<std::size_t, std::vector<Point>> by_length;
  for (Point x = 0; x < n; ++x) {
    if (seen[x])
      continue;
    auto orbit = h.orbit(x);
    for (auto y : orbit)
      seen[y] = true;
    auto &u = by_length[orbit.size()];
    u.insert(u.end(), orbit.begin(), orbit.end());
  }
  std::vector<std::vector<Point>> out;
  for (auto &[len, u] : by_length)
    if (u.size() < n)
      out.push_back(std::move(u));
  return out;
}

bool stabilizes_set(GeneratedGroup const &g, std::vector<Point> const &set)
{
  std::vector<bool> in(g.degree(), false);
  for (auto x : set)
    in[x] = true;
  for (auto const &s : g.generators())
    for (auto x : set)
      if (!in[s[x]])
        return false;
  return true;
}

} // namespace

GeneratedGroup normalizer(GeneratedGroup const &g, GeneratedGroup const &h)
{
  require_subgroup(h, g, "normalizer");
  if (h.size() == g.size() || is_normal(h, g))
    return g;

  // Shrink the ambient group to the stabilizer of each orbit-length class
  // first; the set orbits are cheap to key compared to conjugate subgroups.
  GeneratedGroup ambient = g;
  std::uint64_t set_orbit_cap = std::max<std::uint64_t>(1000, 20000000 / g.degree());
  for (auto const &u : orbit_length_classes(h)) {
    if (stabilizes_set(ambient, u))
      continue;
    auto key = [&](Permutation const &t) {
      SetKey k;
      for (auto x : u)
        k.add_point(t[x]);
      return k;
    };
    try {
      ambient = orbit_stabilizer(ambient, key, h, set_orbit_cap).stabilizer;
    } catch (ResourceError const &) {
      continue;
    }
    if (is_normal(h, ambient))
      return ambient;
  }
  return subgroup_conjugates(ambient, h).stabilizer;
}

GeneratedGroup intersection(GeneratedGroup const &a, GeneratedGroup const &b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch(a.degree(), b.degree());
  if (is_subgroup(a, b))
    return a;
  if (is_subgroup(b, a))
    return b;

  auto const &small = a.size() <= b.size() ? a : b;
  auto const &large = a.size() <= b.size() ? b : a;
  if (small.size() > element_cap_for_keys())
    throw ResourceError("intersection of two groups above the element cap");

  std::vector<Permutation> common;
  small.for_each_element([&](Permutation const &x) {
    if (large.contains(x))
      common.push_back(x);
  });

  GeneratedGroup result = GeneratedGroup::trivial(a.degree());
  for (auto const &x : common) {
    if (result.size() == common.size())
      break;
    if (!result.contains(x))
      result = result.with({x});
  }
  return result;
}

GeneratedGroup core(GeneratedGroup const &g, GeneratedGroup const &h)
{
  require_subgroup(h, g, "core");

  // Each step keeps the core inside h; at the fixed point h is normal.
  GeneratedGroup current = h;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto const &s : g.generators()) {
      auto conj = conjugate_subgroup(current, s);
      if (!equal_groups(conj, current)) {
        current = intersection(current, conj);
        changed = true;
      }
    }
  }
  return current;
}

GeneratedGroup normal_closure(GeneratedGroup const &g,
                              std::vector<Permutation> const &seeds)
{
  for (auto const &x : seeds) {
    if (x.degree() != g.degree())
      throw DegreeMismatch(x.degree(), g.degree());
    if (!g.contains(x))
      throw PreconditionError("normal closure: seed is not in the group");
  }

  GeneratedGroup k = seeds.empty() ? GeneratedGroup::trivial(g.degree())
                                   : GeneratedGroup(seeds);
  for (std::size_t i = 0; i < k.generators().size(); ++i) {
    for (auto const &s : g.generators()) {
      auto c = conjugate(k.generators()[i], s);
      if (!k.contains(c))
        k = k.with({c});
    }
  }
  return k;
}

GeneratedGroup sylow(GeneratedGroup const &g, std::uint64_t p, std::uint64_t seed)
{
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");

  auto target = g.order().p_part(p);
  GeneratedGroup current = GeneratedGroup::trivial(g.degree());
  std::mt19937_64 rng(mix64(seed) ^ p);

  auto p_element = [&](Permutation const &x) -> std::optional<Permutation> {
    auto ord = x.order();
    auto pp = FactoredInteger(ord).p_part(p);
    if (pp == 1)
      return std::nullopt;
    return x.pow(static_cast<std::int64_t>(ord / pp));
  };

  while (current.size() < target) {
    // Cheap attempt first: a random p-element of G that still generates a
    // p-group together with P.
    bool grown = false;
    for (int attempt = 0; attempt < 8 && !grown; ++attempt) {
      auto y = p_element(g.random_element(rng));
      if (!y || current.contains(*y))
        continue;
      auto bigger = current.with({*y});
      if (FactoredInteger(bigger.size()).p_part(p) == bigger.size()) {
        current = std::move(bigger);
        grown = true;
      }
    }
    if (grown)
      continue;

    // A p-element of N_G(P) outside P enlarges P; one always exists while
    // P is not yet Sylow.
    GeneratedGroup n = current.is_trivial() ? g : normalizer(g, current);

    for (int attempt = 0; attempt < 100000 && !grown; ++attempt) {
      auto x = n.random_element(rng);
      auto ord = x.order();
      auto pp = FactoredInteger(ord).p_part(p);
      if (pp == 1)
        continue;
      auto y = x.pow(static_cast<std::int64_t>(ord / pp));
      if (current.contains(y))
        continue;
      current = current.with({y});
      grown = true;
    }
    if (!grown)
      throw ResourceError("Sylow search budget exhausted");
  }
  return current;
}

GeneratedGroup o_p(GeneratedGroup const &g, std::uint64_t p)
{
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  return g.cache().get_or_compute<GeneratedGroup>(
    "o_p:" + std::to_string(p), [&] { return core(g, sylow(g, p)); });
}

std::vector<Permutation> class_representatives(GeneratedGroup const &g,
                                               std::vector<Permutation> const &elements)
{
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> reps;

  for (auto const &x : elements) {
    if (seen.count(x))
      continue;
    reps.push_back(x);
    seen.insert(x);

    std::deque<Permutation> queue{x};
    while (!queue.empty()) {
      auto y = std::move(queue.front());
      queue.pop_front();
      for (auto const &s : g.generators()) {
        auto c = conjugate(y, s);
        if (seen.insert(c).second)
          queue.push_back(std::move(c));
      }
    }
  }
  return reps;
}

std::vector<GeneratedGroup> minimal_normal_subgroups(GeneratedGroup const &g)
{
  return g.cache().get_or_compute<std::vector<GeneratedGroup>>("minimal_normal", [&] {
    std::vector<GeneratedGroup> result;
    if (g.is_trivial())
      return result;

    // Every minimal normal subgroup centralizes F(G): abelian ones lie in
    // Z(F(G)), non-abelian ones meet F(G) trivially.
    auto c = centralizer(g, fitting(g));

    std::vector<Permutation> prime_order;
    c.for_each_element([&](Permutation const &x) {
      if (!x.is_identity() && is_prime(x.order()))
        prime_order.push_back(x);
    });

    std::vector<GeneratedGroup> candidates;
    for (auto const &rep : class_representatives(g, prime_order)) {
      auto k = normal_closure(g, {rep});
      bool known = std::any_of(candidates.begin(), candidates.end(),
                               [&](auto const &c2) { return equal_groups(c2, k); });
      if (!known)
        candidates.push_back(std::move(k));
    }

    for (auto const &k : candidates) {
      bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](auto const &o) {
        return o.size() < k.size() && is_subgroup(o, k);
      });
      if (minimal)
        result.push_back(k);
    }
    return result;
  });
}

GeneratedGroup o_pi(GeneratedGroup const &g, PrimeSet const &pi)
{
  GeneratedGroup r = GeneratedGroup::trivial(g.degree());

  for (;;) {
    std::optional<QuotientPresentation> qp;
    if (!r.is_trivial())
      qp = quotient(g, r);
    GeneratedGroup const &gbar = qp ? qp->quotient : g;

    std::vector<Permutation> gens;
    for (auto const &m : minimal_normal_subgroups(gbar)) {
      if (pi.is_pi_number(m.order()))
        gens.insert(gens.end(), m.generators().begin(), m.generators().end());
    }
    if (gens.empty())
      return r;

    GeneratedGroup s(gens);
    r = qp ? preimage(*qp, s) : s;
  }
}

GeneratedGroup complement(GeneratedGroup const &k, GeneratedGroup const &m,
                          std::uint64_t budget)
{
  auto target = k.size() / m.size();
  if (std::gcd(target, m.size()) != 1)
    throw PreconditionError("complement: subgroup is not a normal Hall subgroup");

  auto m_elements = m.elements(element_cap_for_keys());

  // Order of <gens> if it is at most `limit`, else nullopt.
  auto bounded_order = [&](std::vector<Permutation> const &gens)
    -> std::optional<std::uint64_t> {
    std::unordered_set<Permutation> seen{Permutation(k.degree())};
    std::vector<Permutation> queue{Permutation(k.degree())};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const &s : gens) {
        auto y = queue[i] * s;
        if (seen.insert(y).second) {
          if (seen.size() > target)
            return std::nullopt;
          queue.push_back(std::move(y));
        }
      }
    }
    return seen.size();
  };

  // Any subgroup of order coprime to |M| lies in some complement, so the
  // generators of K can be lifted one at a time.
  std::vector<Permutation> chosen;
  GeneratedGroup cm = m;
  std::uint64_t spent = 0;

  for (auto const &x : k.generators()) {
    if (cm.size() == k.size())
      break;
    if (cm.contains(x))
      continue;

    bool found = false;
    for (auto const &n : m_elements) {
      if (++spent > budget)
        throw ResourceError("complement search budget exhausted");
      auto y = x * n;
      if (std::gcd(y.order(), m.size()) != 1)
        continue;
      auto trial = chosen;
      trial.push_back(y);
      auto ord = bounded_order(trial);
      if (!ord || std::gcd(*ord, m.size()) != 1)
        continue;
      chosen = std::move(trial);
      cm = cm.with({y});
      found = true;
      break;
    }
    if (!found)
      throw Error("complement search found no admissible lift");
  }

  if (chosen.empty())
    return GeneratedGroup::trivial(k.degree());
  return GeneratedGroup(chosen, FactoredInteger(target));
}

namespace
{

GeneratedGroup hall_subgroup(GeneratedGroup const &g, PrimeSet const &pi,
                             HallOptions const &options)
{
  if (pi.is_pi_number(g.order()))
    return g;
  if (pi.pi_part(g.order()) == 1)
    return GeneratedGroup::trivial(g.degree());

  auto mins = minimal_normal_subgroups(g);
  auto const &m = mins.front();
  bool m_pi = pi.is_pi_number(m.order());
  bool m_pi_prime = pi.pi_part(m.order()) == 1;
  if (!m_pi && !m_pi_prime)
    throw PreconditionError("hall: group is not pi-separable for pi = " + pi.str());

  auto qp = quotient(g, m);
  auto hbar = hall_subgroup(qp.quotient, pi, options);
  auto k = preimage(qp, hbar);
  if (m_pi)
    return k;
  return complement(k, m, options.complement_budget);
}

} // namespace

HallWitness hall(GeneratedGroup const &g, PrimeSet const &pi, HallOptions const &options)
{
  auto h = hall_subgroup(g, pi, options);
  auto n = normalizer(g, h);
  return {pi, std::move(h), std::move(n)};
}

} // namespace maxnorm
