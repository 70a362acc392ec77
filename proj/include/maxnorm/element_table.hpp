#ifndef MAXNORM_ELEMENT_TABLE_HPP
#define MAXNORM_ELEMENT_TABLE_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "maxnorm/group.hpp"

namespace maxnorm
{

/// Cap on the number of distinct subgroups a lattice enumeration may hold.
inline constexpr std::uint64_t kMaxLatticeSize = 100000;

/// Full multiplication table of a small group; elements are indexed in the
/// group's enumeration order, index 0 being the identity.
class ElementTable
{
public:
  ElementTable(GeneratedGroup const &g, std::uint64_t cap);

  std::size_t size() const { return elements_.size(); }
  GeneratedGroup const &group() const { return group_; }
  Permutation const &element(std::size_t i) const { return elements_[i]; }
  std::uint32_t index_of(Permutation const &x) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
  { return table_[static_cast<std::size_t>(a) * elements_.size() + b]; }

  std::uint32_t inv(std::uint32_t a) const { return inverses_[a]; }

private:
  GeneratedGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverses_;
};

/// A subgroup of a tabled group as a membership bitmap.
struct TableSubgroup
{
  std::vector<bool> members;
  std::vector<std::uint32_t> gens;
  std::uint64_t order = 0;
  /// Every one-element extension is the whole group (meaningful for proper
  /// subgroups of a lattice enumerated from the trivial group upward).
  bool maximal = false;
};

/// All subgroups of the tabled group that contain `bottom`, enumerated
/// bottom-up by adjoining one element at a time.
std::vector<TableSubgroup> enumerate_subgroups(ElementTable const &table,
                                               TableSubgroup const &bottom,
                                               std::uint64_t max_count = kMaxLatticeSize);

TableSubgroup table_subgroup(ElementTable const &table, GeneratedGroup const &h);
GeneratedGroup to_group(ElementTable const &table, TableSubgroup const &s);

/// Conjugate of a tabled subgroup by element x.
std::vector<bool> conjugate_members(ElementTable const &table,
                                    std::vector<bool> const &members, std::uint32_t x);

/// Every subgroup of G (|G| at most `cap`).
std::vector<GeneratedGroup> all_subgroups(GeneratedGroup const &g, std::uint64_t cap);

/// Subgroups L with Q <= L <= H. Throws ResourceError when |H:Q| exceeds
/// `index_cap`.
std::vector<GeneratedGroup> subgroups_between(GeneratedGroup const &h,
                                              GeneratedGroup const &q,
                                              std::uint64_t index_cap);

} // namespace maxnorm

#endif // MAXNORM_ELEMENT_TABLE_HPP
