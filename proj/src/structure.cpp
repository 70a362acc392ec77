#include "maxnorm/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

#include "maxnorm/element_table.hpp"
#include "maxnorm/errors.hpp"
#include "maxnorm/subgroups.hpp"

namespace maxnorm
{

std::uint64_t enumeration_cap()
{
  if (char const *env = std::getenv("MAXNORM_CAP_ORDER")) {
    try {
      auto v = std::stoull(env);
      if (v > 0)
        return v;
    } catch (std::exception const &) {
    }
  }
  return 2000;
}

GeneratedGroup derived_subgroup(GeneratedGroup const &g)
{
  std::vector<Permutation> commutators;
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        commutators.push_back(std::move(c));
    }
  }
  return normal_closure(g, commutators);
}

std::vector<GeneratedGroup> derived_series(GeneratedGroup const &g)
{
  std::vector<GeneratedGroup> series{g};
  for (;;) {
    auto next = derived_subgroup(series.back());
    if (next.size() == series.back().size())
      return series;
    series.push_back(std::move(next));
  }
}

bool is_solvable(GeneratedGroup const &g)
{
  return g.cache().get_or_compute<bool>(
    "solvable", [&] { return derived_series(g).back().is_trivial(); });
}

bool is_nilpotent(GeneratedGroup const &g)
{
  for (auto p : g.order().primes()) {
    if (o_p(g, p).size() != g.order().p_part(p))
      return false;
  }
  return true;
}

namespace
{

// Walks the series of successive quotients by O_pi x O_pi'. Returns false
// when it stalls; `pi_factor` sees every pi-factor along the way.
template<typename F>
bool walk_separable_series(GeneratedGroup const &g, PrimeSet const &pi, F &&pi_factor)
{
  auto pi_prime = pi.complement_in(g.order());
  GeneratedGroup current = g;

  while (!current.is_trivial()) {
    auto a = o_pi(current, pi);
    auto b = o_pi(current, pi_prime);
    if (a.is_trivial() && b.is_trivial())
      return false;
    if (!a.is_trivial() && !pi_factor(a))
      return false;

    auto x = a.with(b.generators());
    current = quotient(current, x).quotient;
  }
  return true;
}

} // namespace

bool is_pi_separable(GeneratedGroup const &g, PrimeSet const &pi)
{
  return walk_separable_series(g, pi, [](GeneratedGroup const &) { return true; });
}

bool is_pi_solvable(GeneratedGroup const &g, PrimeSet const &pi)
{
  return walk_separable_series(g, pi,
                               [](GeneratedGroup const &a) { return is_solvable(a); });
}

GeneratedGroup fitting(GeneratedGroup const &g)
{
  return g.cache().get_or_compute<GeneratedGroup>("fitting", [&] {
    GeneratedGroup f = GeneratedGroup::trivial(g.degree());
    for (auto p : g.order().primes())
      f = f.with(o_p(g, p).generators());
    return f;
  });
}

namespace
{

struct Lattice
{
  std::shared_ptr<ElementTable> table;
  std::vector<TableSubgroup> subgroups;
};

Lattice const &lattice(GeneratedGroup const &g, std::uint64_t cap)
{
  if (g.size() > cap)
    throw ResourceError("group order " + std::to_string(g.size())
                        + " exceeds the enumeration cap " + std::to_string(cap));

  auto ptr = g.cache().get_or_compute<std::shared_ptr<Lattice const>>("lattice", [&] {
    auto table = std::make_shared<ElementTable>(g, cap);
    auto bottom = table_subgroup(*table, GeneratedGroup::trivial(g.degree()));
    auto subs = enumerate_subgroups(*table, bottom);
    return std::make_shared<Lattice const>(Lattice{std::move(table), std::move(subs)});
  });
  return *ptr;
}

} // namespace

std::vector<MaximalClass> maximal_subgroups(GeneratedGroup const &g, std::uint64_t cap)
{
  auto const &lat = lattice(g, cap);
  auto const &table = *lat.table;

  std::vector<MaximalClass> result;
  std::vector<std::vector<bool>> classified;

  for (auto const &s : lat.subgroups) {
    if (!s.maximal)
      continue;
    bool known = false;
    for (auto const &c : classified) {
      if (c == s.members) {
        known = true;
        break;
      }
    }
    if (known)
      continue;

    std::vector<std::vector<bool>> conjugates{s.members};
    for (std::uint32_t x = 0; x < table.size(); ++x) {
      auto c = conjugate_members(table, s.members, x);
      bool seen = false;
      for (auto const &y : conjugates) {
        if (y == c) {
          seen = true;
          break;
        }
      }
      if (!seen)
        conjugates.push_back(std::move(c));
    }

    result.push_back({to_group(table, s), conjugates.size(), conjugates.size() == 1});
    classified.insert(classified.end(), conjugates.begin(), conjugates.end());
  }
  return result;
}

GeneratedGroup frattini(GeneratedGroup const &g, std::uint64_t cap)
{
  auto const &lat = lattice(g, cap);
  auto const &table = *lat.table;

  std::vector<bool> meet(table.size(), true);
  for (auto const &s : lat.subgroups) {
    if (!s.maximal)
      continue;
    for (std::size_t i = 0; i < meet.size(); ++i)
      meet[i] = meet[i] && s.members[i];
  }

  std::vector<Permutation> elems;
  for (std::size_t i = 0; i < meet.size(); ++i) {
    if (meet[i])
      elems.push_back(table.element(i));
  }
  GeneratedGroup result = GeneratedGroup::trivial(g.degree());
  for (auto const &x : elems) {
    if (!result.contains(x))
      result = result.with({x});
  }
  return result;
}

namespace
{

// Smallest block of the action containing points a and b (Atkinson's
// union-find method); returns whether that block is everything.
bool block_is_everything(std::vector<std::vector<Point>> const &gens, std::size_t n,
                         Point a, Point b)
{
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::size_t classes = n - 1;
  parent[find(b)] = find(a);
  std::vector<std::pair<Point, Point>> queue{{a, b}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [x, y] = queue[i];
    for (auto const &s : gens) {
      Point u = find(s[x]), v = find(s[y]);
      if (u != v) {
        parent[v] = u;
        --classes;
        queue.emplace_back(u, v);
      }
    }
  }
  return classes == 1;
}

// Orbit representatives of the group generated by `gens` on 0..n-1, other
// than the orbit of `skip`.
std::vector<Point> orbit_representatives(std::vector<std::vector<Point>> const &gens,
                                         std::size_t n, Point skip)
{
  std::vector<bool> seen(n, false);
  auto sweep = [&](Point start) {
    std::vector<Point> queue{start};
    seen[start] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto const &s : gens)
        if (!seen[s[queue[i]]]) {
          seen[s[queue[i]]] = true;
          queue.push_back(s[queue[i]]);
        }
  };
  sweep(skip);
  std::vector<Point> reps;
  for (Point start = 0; start < n; ++start) {
    if (!seen[start]) {
      reps.push_back(start);
      sweep(start);
    }
  }
  return reps;
}

} // namespace

bool is_maximal(GeneratedGroup const &g, GeneratedGroup const &h)
{
  if (!is_subgroup(h, g))
    throw PreconditionError("is_maximal: argument is not a subgroup");
  if (h.size() == g.size())
    throw PreconditionError("is_maximal: argument is the whole group");

  // H is maximal iff G acts primitively on the cosets of H, i.e. iff for
  // every H-orbit the smallest block joining it to the base point is
  // everything. When H is a point stabilizer the cosets are that orbit.
  std::vector<std::vector<Point>> g_action;
  std::vector<std::vector<Point>> h_action;
  std::size_t n = 0;

  std::optional<Point> fixed;
  for (Point x = 0; x < g.degree() && !fixed; ++x) {
    bool fixes = std::all_of(h.generators().begin(), h.generators().end(),
                             [&](Permutation const &s) { return s[x] == x; });
    if (fixes && g.orbit(x).size() * h.size() == g.size())
      fixed = x;
  }

  if (fixed) {
    auto orbit = g.orbit(*fixed);
    std::vector<Point> local(g.degree(), 0);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      local[orbit[i]] = static_cast<Point>(i);
    auto restrict = [&](Permutation const &s) {
      std::vector<Point> im(orbit.size());
      for (std::size_t i = 0; i < orbit.size(); ++i)
        im[i] = local[s[orbit[i]]];
      return im;
    };
    for (auto const &s : g.generators())
      g_action.push_back(restrict(s));
    for (auto const &s : h.generators())
      h_action.push_back(restrict(s));
    n = orbit.size();
    Point base = local[*fixed];
    for (auto r : orbit_representatives(h_action, n, base))
      if (!block_is_everything(g_action, n, base, r))
        return false;
    return true;
  }

  CosetAction cosets(g, h);
  n = cosets.size();
  for (auto const &s : cosets.generator_images())
    g_action.push_back(s.images());
  for (auto const &s : h.generators())
    h_action.push_back(cosets.act(s).images());
  for (auto r : orbit_representatives(h_action, n, 0))
    if (!block_is_everything(g_action, n, 0, r))
      return false;
  return true;
}

PrimitiveStructureReport check_primitive_structure(GeneratedGroup const &g,
                                                   GeneratedGroup const &m)
{
  if (!is_subgroup(m, g) || m.size() == g.size())
    throw PreconditionError("M must be a proper subgroup of G");
  if (is_normal(m, g))
    throw PreconditionError("M is normal in G");
  if (!is_maximal(g, m))
    throw PreconditionError("M is not maximal in G");
  if (!core(g, m).is_trivial())
    throw PreconditionError("Core_G(M) is not trivial");

  PrimitiveStructureReport report;
  report.socle = GeneratedGroup::trivial(g.degree());
  for (auto p : g.order().primes()) {
    auto op = o_p(g, p);
    if (!op.is_trivial()) {
      report.p = p;
      report.socle = op;
      break;
    }
  }
  if (report.p == 0)
    return report;

  auto const &n = report.socle;
  report.fitting_equal = equal_groups(fitting(g), n);
  report.self_centralizing = equal_groups(centralizer(g, n), n);
  report.frattini_trivial = g.size() <= enumeration_cap()
                              ? frattini(g).is_trivial()
                              : false;
  report.complement_ok = intersection(m, n).is_trivial()
                         && m.size() * n.size() == g.size();
  report.op_of_m_trivial = o_p(m, report.p).is_trivial();
  return report;
}

StructureReport analyze(GeneratedGroup const &g)
{
  StructureReport report{g.order(), is_solvable(g), is_nilpotent(g), fitting(g),
                         std::nullopt, std::nullopt};
  if (g.size() <= enumeration_cap()) {
    report.frattini = frattini(g);
    report.maximal_classes = maximal_subgroups(g);
  }
  return report;
}

} // namespace maxnorm
