#ifndef MAXNORM_CATALOG_HPP
#define MAXNORM_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maxnorm/arith.hpp"
#include "maxnorm/group.hpp"

namespace maxnorm
{

// Builders. Points are numbered from 1 in the descriptions below.

/// The n-cycle (1 2 ... n).
GeneratedGroup cyclic_group(std::size_t n);
/// Symmetries of the n-gon on n points, order 2n.
GeneratedGroup dihedral_group(std::size_t n);
GeneratedGroup symmetric_group(std::size_t n);
GeneratedGroup alternating_group(std::size_t n);
/// k disjoint p-cycles.
GeneratedGroup elementary_abelian_group(std::uint64_t p, std::size_t k);
/// Both factors on disjoint point sets, a first.
GeneratedGroup direct_product(GeneratedGroup const &a, GeneratedGroup const &b);
/// x -> ax + b over the field with q elements (q a prime power), on q points.
GeneratedGroup affine_line_group(std::uint64_t q);
/// SL(2,3) on the 8 nonzero vectors of the plane over the 3-element field.
GeneratedGroup sl2_3();
/// PSL(2,q) on the projective line: field element x is point x+1, and
/// infinity is point q+1.
GeneratedGroup psl2(std::uint64_t q);
/// The affine group of the 4-dimensional sum-zero submodule of the 5-point
/// permutation module of A5 over the field with 7 elements; 2401 points.
GeneratedGroup affine_a5_f7();
/// The stabilizer of the zero vector in affine_a5_f7(), isomorphic to A5.
GeneratedGroup affine_a5_f7_point_stabilizer();
/// A subgroup of psl2(17) isomorphic to S4, found by a seeded search.
GeneratedGroup s4_inside_psl217(std::uint64_t seed = 0);

struct CatalogEntry
{
  std::string name;
  FactoredInteger expected_order;
  std::set<std::string> tags;
  std::function<GeneratedGroup()> builder;
  /// Maximal subgroups to test when the group is too large to enumerate;
  /// absent means "enumerate the lattice".
  std::function<std::vector<GeneratedGroup>(GeneratedGroup const &)> supplied_maximals;

  bool has_tag(std::string const &tag) const { return tags.count(tag) != 0; }
};

/// All entries in a fixed order.
std::vector<CatalogEntry> const &catalog();

/// Throws UnknownName.
CatalogEntry const &catalog_entry(std::string const &name);

/// Builds (once per process) the named group; throws UnknownName.
GeneratedGroup build(std::string const &name);

/// The supplied maximal subgroups of a catalog group, if any.
std::optional<std::vector<GeneratedGroup>> supplied_maximals(std::string const &name);

// Group files: line-oriented, '#' starts a comment.
//   name <text>          optional
//   degree <n>           required, before any gen line
//   expect-order <n>     optional; checked against the generated order
//   gen <cycles>         one per generator

struct GroupSpec
{
  std::optional<std::string> name;
  std::size_t degree = 0;
  std::optional<std::uint64_t> expected_order;
  std::vector<Permutation> generators;

  bool operator==(GroupSpec const &) const = default;
};

/// Throws ParseError with the offending line number.
GroupSpec parse_group_spec(std::string const &text);
std::string print_group_spec(GroupSpec const &spec);

/// Builds the group and enforces expect-order (PreconditionError on mismatch).
GeneratedGroup group_from_spec(GroupSpec const &spec);
GeneratedGroup parse_group_file(std::string const &text);
std::string print_group_file(GeneratedGroup const &g,
                             std::optional<std::string> const &name = std::nullopt);

} // namespace maxnorm

#endif // MAXNORM_CATALOG_HPP
