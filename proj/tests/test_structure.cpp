#include <doctest.h>

#include "helpers.hpp"

#include "maxnorm/errors.hpp"
#include "maxnorm/structure.hpp"
#include "maxnorm/subgroups.hpp"

using namespace maxnorm;
using namespace maxnorm::test;

TEST_CASE("derived series and solvability")
{
  auto series = derived_series(s4());
  REQUIRE(series.size() == 4);
  CHECK(series[1].size() == 12);
  CHECK(series[2].size() == 4);
  CHECK(series[3].is_trivial());
  CHECK(is_solvable(s4()));
  CHECK_FALSE(is_solvable(sym(5)));
  CHECK(derived_subgroup(sym(5)).size() == 60);
}

TEST_CASE("nilpotency")
{
  CHECK(is_nilpotent(d8_in_s4()));
  CHECK(is_nilpotent(v4()));
  CHECK_FALSE(is_nilpotent(s4()));
  CHECK_FALSE(is_nilpotent(sym(3)));
}

TEST_CASE("pi-separability")
{
  CHECK(is_pi_separable(s4(), PrimeSet{2}));
  CHECK(is_pi_solvable(s4(), PrimeSet{3}));
  CHECK(is_pi_separable(sym(5), PrimeSet{7}));
  CHECK_FALSE(is_pi_separable(sym(5), PrimeSet{2}));
  CHECK_FALSE(is_pi_separable(sym(5), PrimeSet{5}));
  CHECK(is_pi_separable(sym(5), PrimeSet{2, 3, 5}));
  CHECK_FALSE(is_pi_solvable(sym(5), PrimeSet{2, 3, 5}));
}

TEST_CASE("Fitting and Frattini of S4")
{
  CHECK(equal_groups(fitting(s4()), v4()));
  CHECK(frattini(s4()).is_trivial());
  CHECK(frattini(d8_in_s4()).size() == 2);
}

TEST_CASE("maximal subgroup classes of S4")
{
  auto classes = maximal_subgroups(s4());
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> shape;
  for (auto const &c : classes)
    shape.insert({c.representative.size(), c.class_size});
  CHECK(shape == std::multiset<std::pair<std::uint64_t, std::uint64_t>>{{12, 1}, {8, 3}, {6, 4}});
  CHECK(is_maximal(s4(), s3_in_s4()));
  CHECK_FALSE(is_maximal(s4(), v4()));
  CHECK_THROWS_AS(maximal_subgroups(sym(5), 100), ResourceError);
}

TEST_CASE("primitive structure for a core-free maximal subgroup")
{
  auto r = check_primitive_structure(s4(), s3_in_s4());
  CHECK(r.p == 2);
  CHECK(equal_groups(r.socle, v4()));
  CHECK(r.all_hold());
  CHECK_THROWS_AS(check_primitive_structure(s4(), a4()), PreconditionError);
  CHECK_THROWS_AS(check_primitive_structure(s4(), d8_in_s4()), PreconditionError);
}

TEST_CASE("analyze respects the enumeration cap")
{
  auto r = analyze(s4());
  CHECK(r.solvable);
  REQUIRE(r.maximal_classes.has_value());
  CHECK(r.maximal_classes->size() == 3);
}
