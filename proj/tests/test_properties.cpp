#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

#include "maxnorm/catalog.hpp"
#include "maxnorm/structure.hpp"
#include "maxnorm/subgroups.hpp"

using namespace maxnorm;
using namespace maxnorm::test;

namespace
{

std::vector<CatalogEntry const *> entries_up_to(std::uint64_t order)
{
  std::vector<CatalogEntry const *> out;
  for (auto const &e : catalog())
    if (e.expected_order.value() <= order)
      out.push_back(&e);
  return out;
}

std::uint64_t factorial(std::uint64_t n)
{
  return n <= 1 ? 1 : n * factorial(n - 1);
}

} // namespace

TEST_CASE("element enumeration and membership agree with the chain on catalog groups")
{
  std::mt19937_64 rng(11);
  for (auto const *e : entries_up_to(500)) {
    CAPTURE(e->name);
    auto g = build(e->name);
    auto elems = oracle::elements(g);
    CHECK(elems.size() == g.size());
    auto listed = g.elements();
    CHECK(std::set<Permutation>(listed.begin(), listed.end()) == elems);
    for (auto const &x : elems)
      REQUIRE(g.contains(x));

    if (g.degree() <= 8 && g.size() == factorial(g.degree()))
      continue;
    std::vector<Point> images(g.degree());
    int outside = 0;
    for (int tries = 0; outside < 100 && tries < 100000; ++tries) {
      std::iota(images.begin(), images.end(), Point{0});
      std::shuffle(images.begin(), images.end(), rng);
      auto x = Permutation::from_images(images);
      if (elems.count(x))
        continue;
      ++outside;
      REQUIRE_FALSE(g.contains(x));
    }
  }
}

TEST_CASE("symmetric and alternating group orders up to degree 8")
{
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(symmetric_group(n).size() == factorial(n));
    if (n >= 3)
      CHECK(alternating_group(n).size() == factorial(n) / 2);
  }
}

TEST_CASE("independently computed Sylow subgroups are conjugate")
{
  std::mt19937_64 rng(3);
  auto pool = entries_up_to(enumeration_cap());
  for (int pair = 0; pair < 50; ++pair) {
    auto const *e = pool[uniform_below(rng, pool.size())];
    auto g = build(e->name);
    auto primes = g.order().primes();
    if (primes.empty()) {
      --pair;
      continue;
    }
    auto p = primes[uniform_below(rng, primes.size())];
    auto a = sylow(g, p, rng());
    auto b = sylow(g, p, rng());
    CAPTURE(e->name);
    CAPTURE(p);
    REQUIRE(a.size() == g.order().p_part(p));
    REQUIRE(b.size() == a.size());

    bool found = false;
    if (g.size() <= 500) {
      for (auto const &x : oracle::elements(g))
        if ((found = equal_groups(conjugate_subgroup(a, x), b)))
          break;
    } else {
      for (int t = 0; t < 100000 && !found; ++t)
        found = equal_groups(conjugate_subgroup(a, g.random_element(rng)), b);
    }
    CHECK(found);
  }
}

TEST_CASE("Frattini subgroups are normal and nilpotent")
{
  for (auto const *e : entries_up_to(enumeration_cap())) {
    CAPTURE(e->name);
    auto g = build(e->name);
    auto phi = frattini(g);
    CHECK(is_normal(phi, g));
    CHECK(is_nilpotent(phi));
  }
}

TEST_CASE("Fitting subgroup contains each p-core with p'-quotient")
{
  for (auto const *e : entries_up_to(enumeration_cap())) {
    CAPTURE(e->name);
    auto g = build(e->name);
    auto f = fitting(g);
    for (auto p : g.order().primes()) {
      auto op = o_p(g, p);
      CHECK(is_subgroup(op, f));
      CHECK((f.order() / op.order()).exponent(p) == 0);
    }
  }
}

TEST_CASE("pi-separability is symmetric in pi and its complement")
{
  for (auto const *e : entries_up_to(enumeration_cap())) {
    CAPTURE(e->name);
    auto g = build(e->name);
    for (auto const &pi : PrimeSet::of(g.order()).nonempty_subsets()) {
      auto rest = pi.complement_in(g.order());
      if (rest.empty())
        continue;
      CHECK(is_pi_separable(g, pi) == is_pi_separable(g, rest));
    }
  }
}

TEST_CASE("maximal subgroup classes are exhaustive for catalog groups of order at most 200")
{
  for (auto const *e : entries_up_to(200)) {
    CAPTURE(e->name);
    auto g = build(e->name);
    auto gs = oracle::elements(g);
    auto lat = oracle::lattice(g);
    auto classes = maximal_subgroups(g);

    std::vector<std::set<oracle::ElementSet>> class_members;
    std::uint64_t total = 0;
    for (auto const &c : classes) {
      std::set<oracle::ElementSet> members;
      auto rep = oracle::elements(c.representative);
      for (auto const &x : gs)
        members.insert(oracle::conjugate_set(rep, x));
      CHECK(members.size() == c.class_size);
      total += members.size();
      class_members.push_back(std::move(members));
    }

    std::uint64_t maximal_count = 0;
    for (auto const &h : lat.subgroups) {
      if (h.size() == gs.size() || !is_maximal(g, from_elements(h, g.degree())))
        continue;
      ++maximal_count;
      auto hits = std::count_if(class_members.begin(), class_members.end(),
                                [&](auto const &m) { return m.count(h) != 0; });
      CHECK(hits == 1);
    }
    CHECK(maximal_count == total);
    CHECK(maximal_count == oracle::maximal_subgroups(lat, gs.size()).size());
  }
}

TEST_CASE("solvable groups have nontrivial F(H/Core) for every non-normal maximal H")
{
  for (auto const &e : catalog()) {
    if (!e.has_tag("solvable"))
      continue;
    CAPTURE(e.name);
    auto g = build(e.name);
    for (auto const &c : maximal_subgroups(g)) {
      if (c.normal)
        continue;
      auto k = core(g, c.representative);
      auto f = k.is_trivial() ? fitting(c.representative)
                              : fitting(quotient(c.representative, k).quotient);
      CHECK_FALSE(f.is_trivial());
    }
  }
}
