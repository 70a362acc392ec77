#include "doctest.h"

#include <random>

#include "maxnorm/arith.hpp"
#include "maxnorm/errors.hpp"
#include "maxnorm/perm.hpp"
#include "helpers.hpp"

using namespace maxnorm;
using maxnorm::test::P;

TEST_CASE("compose applies the left factor first")
{
  CHECK(compose(P("(1 2)", 3), P("(2 3)", 3)) == P("(1 3 2)", 3));
  CHECK(compose(P("()", 3), P("(1 2 3)", 3)) == P("(1 2 3)", 3));
  CHECK(compose(P("(1 2 3)", 3), P("(1 3 2)", 3)).is_identity());
  CHECK_THROWS_AS(compose(P("(1 2)", 3), P("(1 2)", 4)), DegreeMismatch);
}

TEST_CASE("inverse")
{
  CHECK(inverse(P("(1 2 3)", 3)) == P("(1 3 2)", 3));
  CHECK(inverse(P("(1 2)", 3)) == P("(1 2)", 3));
  CHECK(inverse(Permutation(3)).is_identity());
}

TEST_CASE("conjugate is g^-1 a g")
{
  CHECK(conjugate(P("(1 2)", 3), P("(2 3)", 3)) == P("(1 3)", 3));
  CHECK(conjugate(P("(1 2 3)", 3), Permutation(3)) == P("(1 2 3)", 3));
  CHECK(conjugate(P("(1 2 3)", 3), P("(1 2 3)", 3)) == P("(1 2 3)", 3));
  CHECK_THROWS_AS(conjugate(P("(1 2)", 3), P("(1 2)", 4)), DegreeMismatch);
}

TEST_CASE("cycle notation round trip")
{
  CHECK(Permutation(5).str() == "()");
  CHECK(P("(4 5)(1 2 3)", 5).str() == "(1 2 3)(4 5)");
  CHECK(P(" ( 3 1 ) ", 3).str() == "(1 3)");
  CHECK(P("()", 4).is_identity());
  CHECK_THROWS_AS(P("(1 5)", 4), PreconditionError);
  CHECK_THROWS_AS(P("(1 2)(2 3)", 4), PreconditionError);
  CHECK_THROWS_AS(P("1 2", 4), PreconditionError);
  CHECK_THROWS_AS(P("(1 2", 4), PreconditionError);
}

TEST_CASE("element order and powers")
{
  auto g = P("(1 2 3)(4 5)", 6);
  CHECK(g.order() == 6);
  CHECK(g.pow(6).is_identity());
  CHECK(g.pow(-1) == inverse(g));
  CHECK(g.pow(3) == P("(4 5)", 6));
}

TEST_CASE("group laws on random permutations")
{
  std::mt19937_64 rng(7);
  auto random_perm = [&](std::size_t n) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i)
      images[i] = static_cast<Point>(i);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_images(images);
  };

  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_perm(9), b = random_perm(9), c = random_perm(9), g = random_perm(9);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * inverse(a)).is_identity());
    CHECK((inverse(a) * a).is_identity());
    CHECK(conjugate(a * b, g) == conjugate(a, g) * conjugate(b, g));
  }
}

TEST_CASE("factored integers and prime sets")
{
  FactoredInteger n(2448);
  CHECK(n.factorization() == std::map<std::uint64_t, unsigned>{{2, 4}, {3, 2}, {17, 1}});
  CHECK(n.p_part(2) == 16);
  CHECK(n.p_part(5) == 1);
  CHECK(n.str() == "2448 = {2:4, 3:2, 17:1}");
  CHECK(FactoredInteger(1).factorization().empty());
  CHECK((n / FactoredInteger(24)).value() == 102);
  CHECK_THROWS_AS(n / FactoredInteger(5), PreconditionError);

  PrimeSet pi{2, 3};
  CHECK(pi.is_pi_number(FactoredInteger(24)));
  CHECK_FALSE(pi.is_pi_number(FactoredInteger(2448)));
  CHECK(pi.pi_part(n) == 144);
  CHECK(pi.complement_in(n) == PrimeSet{17});
  CHECK(pi.nonempty_subsets().size() == 3);
  CHECK_THROWS_AS(PrimeSet({4}), PreconditionError);
  CHECK(parse_prime_set("2,3,5") == PrimeSet{2, 3, 5});
}
