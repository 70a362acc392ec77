#ifndef MAXNORM_HARNESS_HPP
#define MAXNORM_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxnorm/arith.hpp"
#include "maxnorm/group.hpp"

namespace maxnorm
{

enum class TheoremId
{
  A,   // some Sylow normalizer lies in each non-normal maximal subgroup
  T1,  // Sylow q-witness for every q dividing |F(H/Core_G H)|
  C11, // the witness also controls every subgroup between Q and H
  C12, // Hall omega-witness for every nonempty omega of those primes
  T2,  // p-solvable G, maximal M of p-power index
  T3,  // pi-solvable G with nilpotent Hall pi-subgroup, maximal M of pi-index
};

/// "A", "1", "1.1", "1.2", "2", "3".
std::string theorem_label(TheoremId id);
/// Inverse of theorem_label; throws UnknownName.
TheoremId parse_theorem(std::string const &label);

enum class Verdict
{
  verified,
  failed,
  hypotheses_not_met,
  /// Some instance ran out of budget and none failed.
  inconclusive,
};

std::string verdict_name(Verdict v);

enum class InstanceStatus
{
  contained,
  not_contained,
  /// Search budget exhausted before a witness was found.
  inconclusive,
  /// Not attempted (for example, an interval above the cap).
  skipped,
};

std::string status_name(InstanceStatus s);

struct TheoremWitness
{
  TheoremId theorem;
  std::string group_name;
  GeneratedGroup maximal = GeneratedGroup::trivial(1);
  GeneratedGroup core;
  /// Set for Sylow witnesses.
  std::optional<std::uint64_t> q;
  /// Set for Hall witnesses: omega, p' or pi'.
  std::optional<PrimeSet> pi;
  /// The witness found, or the last candidate examined when none was.
  std::optional<GeneratedGroup> witness_subgroup;
  std::optional<GeneratedGroup> witness_normalizer;
  InstanceStatus status = InstanceStatus::not_contained;
  /// Free-form detail: case label, skip reason, interval size.
  std::string note;

  bool contained() const { return status == InstanceStatus::contained; }
};

struct VerificationReport
{
  std::string group_name;
  TheoremId theorem;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::vector<TheoremWitness> instances;
  Verdict verdict = Verdict::verified;
  std::optional<std::string> counterexample_details;
  /// Conventions and parameters worth surfacing to readers of the report.
  std::vector<std::string> notes;
};

/// A group to verify, with an optional explicit list of maximal subgroups
/// to test (used above the enumeration cap).
struct Subject
{
  std::string name;
  GeneratedGroup group;
  std::optional<std::vector<GeneratedGroup>> maximals;
};

Subject subject_from_catalog(std::string const &name);

struct HarnessOptions
{
  std::uint64_t conjugate_budget = 10000;
  std::uint64_t interval_cap = 512;
  std::uint64_t complement_budget = 1000000;
  std::uint64_t seed = 0;
};

VerificationReport verify_theorem_A(Subject const &s, HarnessOptions const &o = {});
VerificationReport verify_theorem_1(Subject const &s, HarnessOptions const &o = {});
VerificationReport verify_corollary_1_1(Subject const &s, HarnessOptions const &o = {});
VerificationReport verify_corollary_1_2(Subject const &s, HarnessOptions const &o = {});
VerificationReport verify_theorem_2(Subject const &s, std::uint64_t p,
                                    HarnessOptions const &o = {});
VerificationReport verify_theorem_3(Subject const &s, PrimeSet const &pi,
                                    HarnessOptions const &o = {});

/// Theorem 3 at pi = {p} against Theorem 2: same verdict and, instance by
/// instance, the same maximal subgroup, prime and containment. Meaningful
/// when the nilpotent-Hall hypothesis holds for {p}.
bool specialization_agrees(VerificationReport const &t2, VerificationReport const &t3);

/// Recomputes a witness from scratch: sizes, membership, normalizer and
/// the containment flag. Skipped and inconclusive instances pass trivially.
bool witness_is_valid(GeneratedGroup const &g, TheoremWitness const &w);

// Lemmas. Each throws PreconditionError when its hypotheses fail, so that
// non-conforming instances are excluded rather than counted as failures.

/// pi-separable G, |G:H| a pi-number: O_pi(H) <= O_pi(G).
bool check_lemma_1(GeneratedGroup const &g, GeneratedGroup const &h, PrimeSet const &pi);
/// pi-separable G, N normal, R a Hall pi-subgroup: N_G(R)N/N = N_{G/N}(RN/N).
bool check_lemma_2(GeneratedGroup const &g, GeneratedGroup const &n, PrimeSet const &pi);
/// pi-solvable G with nilpotent Hall pi-subgroups, H maximal of pi-number
/// index: O_pi(H) is normal in G.
bool check_lemma_3(GeneratedGroup const &g, GeneratedGroup const &h, PrimeSet const &pi);

struct LemmaTally
{
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
  std::uint64_t excluded = 0;
};

struct LemmaSweep
{
  std::string group_name;
  LemmaTally lemma1;
  LemmaTally lemma2;
  LemmaTally lemma3;

  bool all_hold() const
  {
    return lemma1.held == lemma1.checked && lemma2.held == lemma2.checked
           && lemma3.held == lemma3.checked;
  }
};

/// Every subgroup H (lemmas 1 and 3) and every normal subgroup N (lemma 2)
/// of an enumerable group, for the given pi or every nonempty subset of
/// the primes dividing |G|.
LemmaSweep check_lemmas(Subject const &s, std::optional<PrimeSet> const &pi = std::nullopt);

/// PSL(2,17) with a maximal S4: the Sylow-normalizer conclusion fails.
VerificationReport psl217_counterexample_demo(HarnessOptions const &o = {});

struct QuestionInstance
{
  std::string group_name;
  std::uint64_t p = 0;
  GeneratedGroup maximal = GeneratedGroup::trivial(1);
  bool fitting_trivial = false;
  /// For fitting_trivial instances: whether some Sylow normalizer of G
  /// lies in M, and for which prime.
  std::optional<bool> sylow_normalizer_inside;
  std::optional<std::uint64_t> sylow_prime;
};

struct QuestionScan
{
  std::vector<QuestionInstance> instances;
  /// Groups skipped, with the reason.
  std::vector<std::pair<std::string, std::string>> skipped;
};

/// Empirical look at the open question: p-solvable G, non-normal maximal M
/// of p-power index. `tag` restricts to catalog entries with that tag.
QuestionScan question_scan(std::optional<std::string> const &tag,
                           HarnessOptions const &o = {});
QuestionScan question_scan(std::vector<Subject> const &subjects, HarnessOptions const &o = {});

} // namespace maxnorm

#endif // MAXNORM_HARNESS_HPP
