#ifndef MAXNORM_SUBGROUPS_HPP
#define MAXNORM_SUBGROUPS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "maxnorm/arith.hpp"
#include "maxnorm/group.hpp"

namespace maxnorm
{

/// Largest orbit (of points, cosets, conjugate subgroups) any search builds.
inline constexpr std::uint64_t kDefaultOrbitCap = 200000;

/**
 * Transversal of an orbit of G acting by right multiplication on some
 * object, together with the stabilizer of the object. The object itself is
 * implicit: `key` maps a group element t to a fingerprint of object^t.
 */
struct OrbitStabilizer
{
  std::vector<Permutation> transversal;
  GeneratedGroup stabilizer;
};

OrbitStabilizer orbit_stabilizer(
  GeneratedGroup const &g, std::function<SetKey(Permutation const &)> const &key,
  GeneratedGroup const &known_stabilizer, std::uint64_t cap = kDefaultOrbitCap);

/// The right cosets H\G with the induced action of G.
class CosetAction
{
public:
  CosetAction(GeneratedGroup const &g, GeneratedGroup const &h,
              std::uint64_t cap = kDefaultOrbitCap);

  std::size_t size() const { return reps_.size(); }

  /// reps()[0] is the identity (the coset H itself).
  std::vector<Permutation> const &reps() const { return reps_; }

  /// Index of the coset H*x; throws PreconditionError if x is not in G.
  std::size_t index_of(Permutation const &x) const;

  /// The permutation of cosets induced by x.
  Permutation act(Permutation const &x) const;

  /// act() applied to the generators of G.
  std::vector<Permutation> const &generator_images() const { return gen_images_; }

  GeneratedGroup const &subgroup() const { return h_; }

private:
  GeneratedGroup h_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::vector<Permutation> gen_images_;
};

/// G/N realized as the action of G on the cosets of N.
struct QuotientPresentation
{
  GeneratedGroup group;
  GeneratedGroup kernel;
  std::shared_ptr<CosetAction const> cosets;
  GeneratedGroup quotient;

  Permutation project(Permutation const &x) const { return cosets->act(x); }

  /// A coset representative in G of the quotient element xbar.
  Permutation section(Permutation const &xbar) const;

  /// Image of a subgroup of G.
  GeneratedGroup project_subgroup(GeneratedGroup const &h) const;
};

struct HallWitness
{
  PrimeSet pi;
  GeneratedGroup subgroup;
  GeneratedGroup normalizer;
};

struct HallOptions
{
  std::uint64_t complement_budget = 1000000;
  std::uint64_t seed = 0;
};

GeneratedGroup centralizer(GeneratedGroup const &g, GeneratedGroup const &h);
GeneratedGroup normalizer(GeneratedGroup const &g, GeneratedGroup const &h);

/// Conjugates of H under G (one transversal element per distinct
/// conjugate, identity first) together with N_G(H).
OrbitStabilizer subgroup_conjugates(GeneratedGroup const &g, GeneratedGroup const &h,
                                    std::uint64_t cap = kDefaultOrbitCap);

GeneratedGroup intersection(GeneratedGroup const &a, GeneratedGroup const &b);
GeneratedGroup core(GeneratedGroup const &g, GeneratedGroup const &h);
GeneratedGroup normal_closure(GeneratedGroup const &g,
                              std::vector<Permutation> const &seeds);

GeneratedGroup sylow(GeneratedGroup const &g, std::uint64_t p, std::uint64_t seed = 0);
HallWitness hall(GeneratedGroup const &g, PrimeSet const &pi,
                 HallOptions const &options = {});

/// A complement to the normal Hall subgroup `m` of `k`.
GeneratedGroup complement(GeneratedGroup const &k, GeneratedGroup const &m,
                          std::uint64_t budget = 1000000);

GeneratedGroup o_p(GeneratedGroup const &g, std::uint64_t p);
GeneratedGroup o_pi(GeneratedGroup const &g, PrimeSet const &pi);

QuotientPresentation quotient(GeneratedGroup const &g, GeneratedGroup const &n);
GeneratedGroup preimage(QuotientPresentation const &qp, GeneratedGroup const &hbar);

/// Minimal normal subgroups, in a deterministic order.
std::vector<GeneratedGroup> minimal_normal_subgroups(GeneratedGroup const &g);

/// Representatives of the G-conjugacy classes of the listed elements
/// (which must form a union of classes), in order of first appearance.
std::vector<Permutation> class_representatives(GeneratedGroup const &g,
                                               std::vector<Permutation> const &elements);

} // namespace maxnorm

#endif // MAXNORM_SUBGROUPS_HPP
