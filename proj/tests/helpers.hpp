#ifndef MAXNORM_TESTS_HELPERS_HPP
#define MAXNORM_TESTS_HELPERS_HPP

#include <set>
#include <string>
#include <vector>

#include "maxnorm/group.hpp"
#include "maxnorm/perm.hpp"

namespace maxnorm::test
{

inline Permutation P(std::string const &s, std::size_t degree)
{
  return Permutation::parse(s, degree);
}

inline GeneratedGroup G(std::size_t degree, std::vector<std::string> const &gens)
{
  std::vector<Permutation> ps;
  for (auto const &s : gens)
    ps.push_back(P(s, degree));
  return GeneratedGroup(std::move(ps));
}

inline GeneratedGroup sym(std::size_t n)
{
  if (n < 2)
    return GeneratedGroup::trivial(1);
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i)
    cycle[i] = static_cast<Point>(i + 1);
  return GeneratedGroup({Permutation::from_cycles(n, {{1, 2}}),
                         Permutation::from_cycles(n, {cycle})});
}

// S4 and its usual subgroups on {1,2,3,4}.
inline GeneratedGroup s4() { return G(4, {"(1 2)", "(1 2 3 4)"}); }
inline GeneratedGroup a4() { return G(4, {"(1 2 3)", "(2 3 4)"}); }
inline GeneratedGroup v4() { return G(4, {"(1 2)(3 4)", "(1 3)(2 4)"}); }
inline GeneratedGroup d8_in_s4() { return G(4, {"(1 2 3 4)", "(1 3)"}); }
inline GeneratedGroup s3_in_s4() { return G(4, {"(1 2)", "(1 2 3)"}); }
inline GeneratedGroup c3_in_s4() { return G(4, {"(1 2 3)"}); }

struct NamedGroup
{
  std::string name;
  GeneratedGroup group;
};

// Small groups used for comparisons against brute-force references.
inline std::vector<NamedGroup> small_zoo()
{
  return {
    {"S3", sym(3)},
    {"S4", s4()},
    {"A4", a4()},
    {"D8", d8_in_s4()},
    {"Q8", G(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"})},
    {"E2_3", G(6, {"(1 2)", "(3 4)", "(5 6)"})},
    {"D12", G(6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"})},
    {"AGL1_5", G(5, {"(1 2 3 4 5)", "(2 3 5 4)"})},
    {"AGL1_7", G(7, {"(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"})},
    {"S3xS3", G(6, {"(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"})},
    {"S4xC2", G(6, {"(1 2)", "(1 2 3 4)", "(5 6)"})},
  };
}

inline GeneratedGroup from_elements(std::set<Permutation> const &elems, std::size_t degree)
{
  GeneratedGroup h = GeneratedGroup::trivial(degree);
  for (auto const &x : elems)
    if (!h.contains(x))
      h = h.with({x});
  return h;
}

inline std::set<Permutation> element_set(GeneratedGroup const &g)
{
  auto v = g.elements();
  return {v.begin(), v.end()};
}

} // namespace maxnorm::test

#endif // MAXNORM_TESTS_HELPERS_HPP
