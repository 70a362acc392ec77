#include "maxnorm/element_table.hpp"

#include "maxnorm/errors.hpp"

namespace maxnorm
{

namespace
{

struct MembersHash
{
  std::size_t operator()(std::vector<bool> const &v) const
  { return std::hash<std::vector<bool>>{}(v); }
};

TableSubgroup closure(ElementTable const &table, std::vector<std::uint32_t> gens)
{
  TableSubgroup s;
  s.members.assign(table.size(), false);
  s.members[0] = true;
  std::vector<std::uint32_t> queue{0};

  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto g : gens) {
      auto y = table.mul(queue[i], g);
      if (!s.members[y]) {
        s.members[y] = true;
        queue.push_back(y);
      }
    }
  }

  s.order = queue.size();
  s.gens = std::move(gens);
  return s;
}

} // namespace

ElementTable::ElementTable(GeneratedGroup const &g, std::uint64_t cap)
: group_(g), elements_(g.elements(cap))
{
  auto n = elements_.size();
  for (std::size_t i = 0; i < n; ++i)
    index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
  if (!elements_.front().is_identity())
    throw Error("element enumeration must start with the identity");

  table_.resize(n * n);
  inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto c = index_.at(elements_[a] * elements_[b]);
      table_[a * n + b] = c;
      if (c == 0)
        inverses_[a] = static_cast<std::uint32_t>(b);
    }
  }
}

std::uint32_t ElementTable::index_of(Permutation const &x) const
{
  auto it = index_.find(x);
  if (it == index_.end())
    throw PreconditionError("element outside the tabled group");
  return it->second;
}

std::vector<TableSubgroup> enumerate_subgroups(ElementTable const &table,
                                               TableSubgroup const &bottom,
                                               std::uint64_t max_count)
{
  auto const n = table.size();
  std::vector<TableSubgroup> result{bottom};
  std::unordered_map<std::vector<bool>, std::size_t, MembersHash> seen;
  seen.emplace(bottom.members, 0);

  for (std::size_t i = 0; i < result.size(); ++i) {
    bool maximal = result[i].order < n;
    std::vector<bool> covered = result[i].members;

    for (std::uint32_t g = 0; g < n; ++g) {
      if (covered[g])
        continue;
      // <H, g> only depends on the coset Hg.
      for (std::uint32_t h = 0; h < n; ++h) {
        if (result[i].members[h])
          covered[table.mul(h, g)] = true;
      }

      auto gens = result[i].gens;
      gens.push_back(g);
      auto ext = closure(table, std::move(gens));
      if (ext.order != n)
        maximal = false;

      if (seen.emplace(ext.members, result.size()).second) {
        if (result.size() >= max_count)
          throw ResourceError("subgroup enumeration exceeds "
                              + std::to_string(max_count) + " subgroups");
        result.push_back(std::move(ext));
      }
    }
    result[i].maximal = maximal;
  }
  return result;
}

TableSubgroup table_subgroup(ElementTable const &table, GeneratedGroup const &h)
{
  std::vector<std::uint32_t> gens;
  for (auto const &x : h.generators()) {
    if (!x.is_identity())
      gens.push_back(table.index_of(x));
  }
  return closure(table, std::move(gens));
}

GeneratedGroup to_group(ElementTable const &table, TableSubgroup const &s)
{
  std::vector<Permutation> gens;
  for (auto i : s.gens)
    gens.push_back(table.element(i));
  if (gens.empty())
    return GeneratedGroup::trivial(table.group().degree());
  return GeneratedGroup(std::move(gens), FactoredInteger(s.order));
}

std::vector<bool> conjugate_members(ElementTable const &table,
                                    std::vector<bool> const &members, std::uint32_t x)
{
  std::vector<bool> result(members.size(), false);
  auto xi = table.inv(x);
  for (std::uint32_t h = 0; h < members.size(); ++h) {
    if (members[h])
      result[table.mul(table.mul(xi, h), x)] = true;
  }
  return result;
}

std::vector<GeneratedGroup> all_subgroups(GeneratedGroup const &g, std::uint64_t cap)
{
  ElementTable table(g, cap);
  auto bottom = table_subgroup(table, GeneratedGroup::trivial(g.degree()));
  std::vector<GeneratedGroup> result;
  for (auto const &s : enumerate_subgroups(table, bottom))
    result.push_back(to_group(table, s));
  return result;
}

std::vector<GeneratedGroup> subgroups_between(GeneratedGroup const &h,
                                              GeneratedGroup const &q,
                                              std::uint64_t index_cap)
{
  if (!is_subgroup(q, h))
    throw PreconditionError("interval bottom is not a subgroup of the top");
  if (h.size() / q.size() > index_cap)
    throw ResourceError("interval index " + std::to_string(h.size() / q.size())
                        + " exceeds cap " + std::to_string(index_cap));

  ElementTable table(h, kDefaultElementCap);
  std::vector<GeneratedGroup> result;
  for (auto const &s : enumerate_subgroups(table, table_subgroup(table, q)))
    result.push_back(to_group(table, s));
  return result;
}

} // namespace maxnorm
