#ifndef MAXNORM_STRUCTURE_HPP
#define MAXNORM_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "maxnorm/arith.hpp"
#include "maxnorm/group.hpp"

namespace maxnorm
{

/// Largest group order for which the full subgroup lattice is enumerated.
/// Defaults to 2000; the MAXNORM_CAP_ORDER environment variable overrides it.
std::uint64_t enumeration_cap();

std::vector<GeneratedGroup> derived_series(GeneratedGroup const &g);
GeneratedGroup derived_subgroup(GeneratedGroup const &g);

bool is_solvable(GeneratedGroup const &g);
bool is_nilpotent(GeneratedGroup const &g);

/// Built from the series O_pi x O_pi' of successive quotients.
bool is_pi_separable(GeneratedGroup const &g, PrimeSet const &pi);

/// pi-separable with every pi-factor of that series solvable. The term is
/// not standardized; this is the convention used throughout the library.
bool is_pi_solvable(GeneratedGroup const &g, PrimeSet const &pi);

/// Product of the p-cores over all primes dividing |G|.
GeneratedGroup fitting(GeneratedGroup const &g);

struct MaximalClass
{
  GeneratedGroup representative;
  std::uint64_t class_size;
  bool normal;
};

/// One representative per conjugacy class of maximal subgroups. Throws
/// ResourceError when |G| exceeds `cap`.
std::vector<MaximalClass> maximal_subgroups(GeneratedGroup const &g,
                                            std::uint64_t cap = enumeration_cap());

/// Decided by scanning double coset representatives g and testing whether
/// <H, g> acts transitively on the cosets of H. Works above the lattice cap.
bool is_maximal(GeneratedGroup const &g, GeneratedGroup const &h);

/// Intersection of all maximal subgroups.
GeneratedGroup frattini(GeneratedGroup const &g, std::uint64_t cap = enumeration_cap());

struct PrimitiveStructureReport
{
  std::uint64_t p = 0;
  GeneratedGroup socle = GeneratedGroup::trivial(1);
  bool fitting_equal = false;
  bool self_centralizing = false;
  bool frattini_trivial = false;
  bool complement_ok = false;
  bool op_of_m_trivial = false;

  bool all_hold() const
  {
    return p != 0 && fitting_equal && self_centralizing && frattini_trivial
           && complement_ok && op_of_m_trivial;
  }
};

/// For a non-normal maximal M with trivial core, tests
/// O_p(G) = F(G) = C_G(O_p(G)) != 1, Phi(G) = 1, G = M O_p(G) with
/// M and O_p(G) meeting trivially, and O_p(M) = 1.
PrimitiveStructureReport check_primitive_structure(GeneratedGroup const &g,
                                                   GeneratedGroup const &m);

struct StructureReport
{
  FactoredInteger order;
  bool solvable;
  bool nilpotent;
  GeneratedGroup fitting;
  std::optional<GeneratedGroup> frattini;
  std::optional<std::vector<MaximalClass>> maximal_classes;
};

/// Frattini subgroup and maximal classes are omitted above the lattice cap.
StructureReport analyze(GeneratedGroup const &g);

} // namespace maxnorm

#endif // MAXNORM_STRUCTURE_HPP
