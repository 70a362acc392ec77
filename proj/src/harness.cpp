#include "maxnorm/harness.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "maxnorm/catalog.hpp"
#include "maxnorm/element_table.hpp"
#include "maxnorm/errors.hpp"
#include "maxnorm/structure.hpp"
#include "maxnorm/subgroups.hpp"

namespace maxnorm
{

std::string theorem_label(TheoremId id)
{
  switch (id) {
  case TheoremId::A: return "A";
  case TheoremId::T1: return "1";
  case TheoremId::C11: return "1.1";
  case TheoremId::C12: return "1.2";
  case TheoremId::T2: return "2";
  case TheoremId::T3: return "3";
  }
  return "?";
}

TheoremId parse_theorem(std::string const &label)
{
  for (auto id : {TheoremId::A, TheoremId::T1, TheoremId::C11, TheoremId::C12, TheoremId::T2,
                  TheoremId::T3})
    if (theorem_label(id) == label)
      return id;
  throw UnknownName("unknown theorem '" + label + "' (expected A, 1, 1.1, 1.2, 2 or 3)");
}

std::string verdict_name(Verdict v)
{
  switch (v) {
  case Verdict::verified: return "verified";
  case Verdict::failed: return "failed";
  case Verdict::hypotheses_not_met: return "hypotheses_not_met";
  case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string status_name(InstanceStatus s)
{
  switch (s) {
  case InstanceStatus::contained: return "contained";
  case InstanceStatus::not_contained: return "not_contained";
  case InstanceStatus::inconclusive: return "inconclusive";
  case InstanceStatus::skipped: return "skipped";
  }
  return "?";
}

Subject subject_from_catalog(std::string const &name)
{
  return {name, build(name), supplied_maximals(name)};
}

namespace
{

std::string const kPiSolvableNote =
  "pi-solvable is taken to mean pi-separable with solvable pi-factors";
std::string const kOmegaNote = "omega ranges over every nonempty subset of pi(F(H/Core_G H))";

std::vector<GeneratedGroup> non_normal_maximals(Subject const &s)
{
  std::vector<GeneratedGroup> out;
  if (s.maximals) {
    for (auto const &h : *s.maximals)
      if (!is_normal(h, s.group))
        out.push_back(h);
    return out;
  }
  for (auto const &c : maximal_subgroups(s.group))
    if (!c.normal)
      out.push_back(c.representative);
  return out;
}

GeneratedGroup fitting_mod_core(GeneratedGroup const &h, GeneratedGroup const &core_h)
{
  if (core_h.is_trivial())
    return fitting(h);
  return fitting(quotient(h, core_h).quotient);
}

bool is_prime_power_of(std::uint64_t n, PrimeSet const &pi)
{
  return n > 1 && pi.is_pi_number(FactoredInteger(n));
}

struct SearchResult
{
  InstanceStatus status = InstanceStatus::not_contained;
  std::optional<GeneratedGroup> subgroup;
  std::optional<GeneratedGroup> normalizer;
  std::string note;
};

// Looks for a G-conjugate X^t of `base` with N_G(X^t) inside H. `preferred`,
// when given, is a member of the same conjugacy class lying in H and is
// tried first.
SearchResult search_conjugates(GeneratedGroup const &g, GeneratedGroup const &h,
                               GeneratedGroup const &base,
                               std::optional<GeneratedGroup> const &preferred,
                               std::uint64_t budget)
{
  SearchResult r;
  auto x = preferred ? *preferred : base;
  auto n = normalizer(g, x);
  r.subgroup = x;
  r.normalizer = n;
  if (is_subgroup(n, h)) {
    r.status = InstanceStatus::contained;
    return r;
  }
  if (h.size() % n.size() != 0) {
    r.note = "|N_G| = " + std::to_string(n.size()) + " does not divide |H| = "
             + std::to_string(h.size());
    return r;
  }

  auto count = g.size() / n.size();
  if (count > budget) {
    r.status = InstanceStatus::inconclusive;
    r.note = std::to_string(count) + " conjugates exceed the scan budget";
    return r;
  }

  auto elems = x.elements(2000000);
  auto key = [&](Permutation const &t) {
    SetKey k;
    for (auto const &e : elems)
      k.add(conjugate(e, t));
    return k;
  };
  auto orbit = orbit_stabilizer(g, key, n, budget + 1);
  for (auto const &t : orbit.transversal) {
    bool inside = std::all_of(n.generators().begin(), n.generators().end(),
                              [&](Permutation const &y) { return h.contains(conjugate(y, t)); });
    if (inside) {
      r.status = InstanceStatus::contained;
      r.subgroup = conjugate_subgroup(x, t);
      r.normalizer = conjugate_subgroup(n, t);
      return r;
    }
  }
  r.note = "none of the " + std::to_string(count) + " conjugates has its normalizer in H";
  return r;
}

SearchResult search_sylow(GeneratedGroup const &g, GeneratedGroup const &h, std::uint64_t q,
                          HarnessOptions const &o)
{
  try {
    auto full = g.order().p_part(q);
    std::optional<GeneratedGroup> preferred;
    if (h.order().p_part(q) == full)
      preferred = sylow(h, q, o.seed);
    auto base = preferred ? *preferred : sylow(g, q, o.seed);
    return search_conjugates(g, h, base, preferred, o.conjugate_budget);
  } catch (ResourceError const &e) {
    SearchResult r;
    r.status = InstanceStatus::inconclusive;
    r.note = e.what();
    return r;
  }
}

SearchResult search_hall(GeneratedGroup const &g, GeneratedGroup const &h, PrimeSet const &pi,
                         HarnessOptions const &o)
{
  HallOptions hopts{o.complement_budget, o.seed};
  try {
    auto full = pi.pi_part(g.order());
    std::optional<GeneratedGroup> preferred;
    if (pi.pi_part(h.order()) == full) {
      try {
        preferred = hall(h, pi, hopts).subgroup;
      } catch (PreconditionError const &) {
      }
    }
    auto base = preferred ? *preferred : hall(g, pi, hopts).subgroup;
    return search_conjugates(g, h, base, preferred, o.conjugate_budget);
  } catch (ResourceError const &e) {
    SearchResult r;
    r.status = InstanceStatus::inconclusive;
    r.note = e.what();
    return r;
  }
}

TheoremWitness make_witness(TheoremId id, Subject const &s, GeneratedGroup const &h,
                            GeneratedGroup const &core_h, SearchResult const &r)
{
  TheoremWitness w{id, s.name, h, core_h, std::nullopt, std::nullopt,
                   r.subgroup, r.normalizer, r.status, r.note};
  return w;
}

void finish(VerificationReport &report)
{
  bool hyps = std::all_of(report.hypotheses.begin(), report.hypotheses.end(),
                          [](auto const &hp) { return hp.second; });
  auto any = [&](InstanceStatus st) {
    return std::any_of(report.instances.begin(), report.instances.end(),
                       [&](TheoremWitness const &w) { return w.status == st; });
  };
  // A falsified conclusion is reported even when the hypotheses fail, so
  // that counterexamples to the solvable-case statement surface.
  if (any(InstanceStatus::not_contained))
    report.verdict = hyps ? Verdict::failed
                          : (report.theorem == TheoremId::A ? Verdict::failed
                                                           : Verdict::hypotheses_not_met);
  else if (!hyps)
    report.verdict = Verdict::hypotheses_not_met;
  else if (any(InstanceStatus::inconclusive))
    report.verdict = Verdict::inconclusive;
  else
    report.verdict = Verdict::verified;
}

VerificationReport start(TheoremId id, Subject const &s)
{
  VerificationReport r;
  r.group_name = s.name;
  r.theorem = id;
  return r;
}

// Per (H, q) Sylow instances for every q dividing |F(H/Core_G H)|.
void sylow_instances_over_fitting(VerificationReport &report, TheoremId id, Subject const &s,
                                  GeneratedGroup const &h, GeneratedGroup const &core_h,
                                  GeneratedGroup const &fit, HarnessOptions const &o,
                                  std::string const &note)
{
  for (auto q : fit.order().primes()) {
    auto r = search_sylow(s.group, h, q, o);
    auto w = make_witness(id, s, h, core_h, r);
    w.q = q;
    if (!note.empty())
      w.note = w.note.empty() ? note : note + "; " + w.note;
    report.instances.push_back(std::move(w));
  }
}

} // namespace

VerificationReport verify_theorem_A(Subject const &s, HarnessOptions const &o)
{
  auto report = start(TheoremId::A, s);
  report.hypotheses.emplace_back("G is solvable", is_solvable(s.group));

  std::ostringstream details;
  for (auto const &h : non_normal_maximals(s)) {
    auto core_h = core(s.group, h);
    std::optional<TheoremWitness> found;
    std::optional<TheoremWitness> last;
    bool inconclusive = false;
    for (auto p : s.group.order().primes()) {
      auto r = search_sylow(s.group, h, p, o);
      auto w = make_witness(TheoremId::A, s, h, core_h, r);
      w.q = p;
      if (r.status == InstanceStatus::contained) {
        found = std::move(w);
        break;
      }
      inconclusive = inconclusive || r.status == InstanceStatus::inconclusive;
      details << "H of order " << h.size() << ", p = " << p << ": Sylow order "
              << (r.subgroup ? r.subgroup->size() : 0) << ", |N_G(Q)| = "
              << (r.normalizer ? r.normalizer->size() : 0) << "; "
              << (r.note.empty() ? "normalizer not in H" : r.note) << "\n";
      last = std::move(w);
    }
    if (found) {
      report.instances.push_back(std::move(*found));
    } else if (last) {
      if (inconclusive)
        last->status = InstanceStatus::inconclusive;
      last->note = "no Sylow normalizer of G lies in H";
      report.instances.push_back(std::move(*last));
    }
  }
  finish(report);
  if (report.verdict == Verdict::failed)
    report.counterexample_details = details.str();
  return report;
}

VerificationReport verify_theorem_1(Subject const &s, HarnessOptions const &o)
{
  auto report = start(TheoremId::T1, s);
  report.hypotheses.emplace_back("G is solvable", is_solvable(s.group));
  if (!report.hypotheses.back().second) {
    finish(report);
    return report;
  }
  for (auto const &h : non_normal_maximals(s)) {
    auto core_h = core(s.group, h);
    auto fit = fitting_mod_core(h, core_h);
    sylow_instances_over_fitting(report, TheoremId::T1, s, h, core_h, fit, o, "");
  }
  finish(report);
  return report;
}

VerificationReport verify_corollary_1_1(Subject const &s, HarnessOptions const &o)
{
  auto report = start(TheoremId::C11, s);
  report.hypotheses.emplace_back("G is solvable", is_solvable(s.group));
  if (!report.hypotheses.back().second) {
    finish(report);
    return report;
  }
  report.notes.push_back("interval cap |H:Q| <= " + std::to_string(o.interval_cap));

  auto const &g = s.group;
  for (auto const &h : non_normal_maximals(s)) {
    auto core_h = core(g, h);
    auto fit = fitting_mod_core(h, core_h);
    for (auto q : fit.order().primes()) {
      TheoremWitness w{TheoremId::C11, s.name, h, core_h, q, std::nullopt,
                       std::nullopt, std::nullopt, InstanceStatus::not_contained, ""};
      auto q0 = sylow(h, q, o.seed);
      if (q0.size() != g.order().p_part(q)) {
        w.witness_subgroup = q0;
        w.witness_normalizer = normalizer(g, q0);
        w.note = "H contains no Sylow q-subgroup of G";
        report.instances.push_back(std::move(w));
        continue;
      }
      if (h.size() / q0.size() > o.interval_cap) {
        w.status = InstanceStatus::skipped;
        w.note = "interval |H:Q| = " + std::to_string(h.size() / q0.size()) + " exceeds cap";
        report.instances.push_back(std::move(w));
        continue;
      }

      // Sylow q-subgroups of G inside H are the H-conjugates of q0.
      auto conj = subgroup_conjugates(h, q0);
      for (auto const &t : conj.transversal) {
        auto q_t = conjugate_subgroup(q0, t);
        auto n_t = normalizer(g, q_t);
        w.witness_subgroup = q_t;
        w.witness_normalizer = n_t;
        if (!is_subgroup(n_t, h))
          continue;
        auto interval = subgroups_between(h, q_t, o.interval_cap);
        bool all = std::all_of(interval.begin(), interval.end(), [&](GeneratedGroup const &l) {
          return is_subgroup(normalizer(g, l), h);
        });
        if (all) {
          w.status = InstanceStatus::contained;
          w.note = "interval of " + std::to_string(interval.size()) + " subgroups";
          break;
        }
      }
      if (!w.contained() && w.note.empty())
        w.note = "no Sylow q-subgroup of H controls its whole interval";
      report.instances.push_back(std::move(w));
    }
  }
  finish(report);
  return report;
}

VerificationReport verify_corollary_1_2(Subject const &s, HarnessOptions const &o)
{
  auto report = start(TheoremId::C12, s);
  report.hypotheses.emplace_back("G is solvable", is_solvable(s.group));
  if (!report.hypotheses.back().second) {
    finish(report);
    return report;
  }
  report.notes.push_back(kOmegaNote);

  for (auto const &h : non_normal_maximals(s)) {
    auto core_h = core(s.group, h);
    auto fit = fitting_mod_core(h, core_h);
    for (auto const &omega : PrimeSet::of(fit.order()).nonempty_subsets()) {
      auto r = search_hall(s.group, h, omega, o);
      auto w = make_witness(TheoremId::C12, s, h, core_h, r);
      w.pi = omega;
      report.instances.push_back(std::move(w));
    }
  }
  finish(report);
  return report;
}

namespace
{

// Shared body of Theorems 2 and 3: maximal M of pi-number index, case 1
// when F(M/Core_G M) != 1, otherwise a Hall pi'-witness.
void prime_index_instances(VerificationReport &report, TheoremId id, Subject const &s,
                           PrimeSet const &pi, HarnessOptions const &o)
{
  auto const &g = s.group;
  auto pi_prime = pi.complement_in(g.order());
  for (auto const &m : non_normal_maximals(s)) {
    if (!is_prime_power_of(g.size() / m.size(), pi))
      continue;
    auto core_m = core(g, m);
    auto fit = fitting_mod_core(m, core_m);
    if (!fit.is_trivial()) {
      sylow_instances_over_fitting(report, id, s, m, core_m, fit, o, "case 1");
      continue;
    }
    auto r = search_hall(g, m, pi_prime, o);
    auto w = make_witness(id, s, m, core_m, r);
    w.pi = pi_prime;
    w.note = w.note.empty() ? "case 2" : "case 2; " + w.note;
    report.instances.push_back(std::move(w));
  }
}

} // namespace

VerificationReport verify_theorem_2(Subject const &s, std::uint64_t p, HarnessOptions const &o)
{
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  auto report = start(TheoremId::T2, s);
  report.notes.push_back(kPiSolvableNote);
  report.notes.push_back("p = " + std::to_string(p));
  PrimeSet pi{p};
  report.hypotheses.emplace_back("G is p-solvable", is_pi_solvable(s.group, pi));
  if (report.hypotheses.back().second)
    prime_index_instances(report, TheoremId::T2, s, pi, o);
  finish(report);
  return report;
}

VerificationReport verify_theorem_3(Subject const &s, PrimeSet const &pi, HarnessOptions const &o)
{
  if (pi.empty())
    throw PreconditionError("theorem 3 needs a nonempty prime set");
  auto report = start(TheoremId::T3, s);
  report.notes.push_back(kPiSolvableNote);
  report.notes.push_back("pi = " + pi.str());
  report.hypotheses.emplace_back("G is pi-solvable", is_pi_solvable(s.group, pi));
  if (!report.hypotheses.back().second) {
    finish(report);
    return report;
  }
  auto r = hall(s.group, pi, {o.complement_budget, o.seed}).subgroup;
  report.hypotheses.emplace_back("Hall pi-subgroup is nilpotent", is_nilpotent(r));
  if (report.hypotheses.back().second)
    prime_index_instances(report, TheoremId::T3, s, pi, o);
  finish(report);
  return report;
}

bool specialization_agrees(VerificationReport const &t2, VerificationReport const &t3)
{
  if (t2.verdict != t3.verdict || t2.instances.size() != t3.instances.size())
    return false;
  for (std::size_t i = 0; i < t2.instances.size(); ++i) {
    auto const &a = t2.instances[i];
    auto const &b = t3.instances[i];
    if (!equal_groups(a.maximal, b.maximal) || a.q != b.q || a.pi != b.pi
        || a.status != b.status)
      return false;
  }
  return true;
}

bool witness_is_valid(GeneratedGroup const &g, TheoremWitness const &w)
{
  if (w.status == InstanceStatus::skipped || w.status == InstanceStatus::inconclusive)
    return true;
  if (!w.witness_subgroup || !w.witness_normalizer)
    return false;
  auto const &x = *w.witness_subgroup;
  if (!is_subgroup(x, g) || !is_subgroup(w.maximal, g))
    return false;
  if (!equal_groups(core(g, w.maximal), w.core))
    return false;

  if (w.q) {
    if (x.size() != g.order().p_part(*w.q))
      return false;
    bool from_fitting = w.theorem != TheoremId::A;
    if (from_fitting && fitting_mod_core(w.maximal, w.core).order().exponent(*w.q) == 0)
      return false;
  }
  if (w.pi && x.size() != w.pi->pi_part(g.order()))
    return false;

  auto fresh = normalizer(g, x);
  if (!equal_groups(fresh, *w.witness_normalizer))
    return false;
  bool inside = is_subgroup(fresh, w.maximal);
  if (w.contained() != inside && w.theorem != TheoremId::C11)
    return false;
  if (w.theorem == TheoremId::C11 && w.contained()) {
    if (!inside)
      return false;
    for (auto const &l : subgroups_between(w.maximal, x, kDefaultElementCap))
      if (!is_subgroup(normalizer(g, l), w.maximal))
        return false;
  }
  return true;
}

bool check_lemma_1(GeneratedGroup const &g, GeneratedGroup const &h, PrimeSet const &pi)
{
  if (!is_subgroup(h, g))
    throw PreconditionError("lemma 1: H is not a subgroup of G");
  if (!pi.is_pi_number(FactoredInteger(g.size() / h.size())))
    throw PreconditionError("lemma 1: |G:H| is not a pi-number");
  if (!is_pi_separable(g, pi))
    throw PreconditionError("lemma 1: G is not pi-separable");
  return is_subgroup(o_pi(h, pi), o_pi(g, pi));
}

bool check_lemma_2(GeneratedGroup const &g, GeneratedGroup const &n, PrimeSet const &pi)
{
  if (!is_subgroup(n, g) || !is_normal(n, g))
    throw PreconditionError("lemma 2: N is not normal in G");
  if (!is_pi_separable(g, pi))
    throw PreconditionError("lemma 2: G is not pi-separable");
  auto r = hall(g, pi).subgroup;
  auto qp = quotient(g, n);
  auto lhs = qp.project_subgroup(normalizer(g, r));
  auto rhs = normalizer(qp.quotient, qp.project_subgroup(r));
  return equal_groups(lhs, rhs);
}

bool check_lemma_3(GeneratedGroup const &g, GeneratedGroup const &h, PrimeSet const &pi)
{
  if (!is_subgroup(h, g) || h.size() == g.size())
    throw PreconditionError("lemma 3: H is not a proper subgroup of G");
  if (!pi.is_pi_number(FactoredInteger(g.size() / h.size())))
    throw PreconditionError("lemma 3: |G:H| is not a pi-number");
  if (!is_pi_solvable(g, pi))
    throw PreconditionError("lemma 3: G is not pi-solvable");
  if (!is_nilpotent(hall(g, pi).subgroup))
    throw PreconditionError("lemma 3: Hall pi-subgroups are not nilpotent");
  if (!is_maximal(g, h))
    throw PreconditionError("lemma 3: H is not maximal");
  return is_normal(o_pi(h, pi), g);
}

LemmaSweep check_lemmas(Subject const &s, std::optional<PrimeSet> const &pi)
{
  auto const &g = s.group;
  LemmaSweep sweep;
  sweep.group_name = s.name;

  auto subgroups = all_subgroups(g, enumeration_cap());
  std::vector<PrimeSet> sets = pi ? std::vector<PrimeSet>{*pi}
                                  : PrimeSet::of(g.order()).nonempty_subsets();

  auto tally = [](LemmaTally &t, auto &&check) {
    try {
      bool ok = check();
      ++t.checked;
      t.held += ok ? 1 : 0;
    } catch (PreconditionError const &) {
      ++t.excluded;
    }
  };

  for (auto const &p : sets) {
    for (auto const &h : subgroups) {
      if (!p.is_pi_number(FactoredInteger(g.size() / h.size())))
        continue;
      tally(sweep.lemma1, [&] { return check_lemma_1(g, h, p); });
      if (h.size() != g.size())
        tally(sweep.lemma3, [&] { return check_lemma_3(g, h, p); });
    }
    for (auto const &n : subgroups)
      if (is_normal(n, g))
        tally(sweep.lemma2, [&] { return check_lemma_2(g, n, p); });
  }
  return sweep;
}

VerificationReport psl217_counterexample_demo(HarnessOptions const &o)
{
  auto g = build("PSL2_17");
  auto s4 = s4_inside_psl217(o.seed);
  Subject subject{"PSL2_17", g, std::vector<GeneratedGroup>{s4}};

  auto report = verify_theorem_A(subject, o);
  bool maximal = is_maximal(g, s4);
  report.hypotheses.emplace_back("|G| = 2448 = 2^4 * 3^2 * 17",
                                 g.order() == FactoredInteger({{2, 4}, {3, 2}, {17, 1}}));
  report.hypotheses.emplace_back("|S4| = 24 = 2^3 * 3", s4.order() == FactoredInteger(24));
  report.hypotheses.emplace_back("S4 is maximal in G", maximal);

  std::ostringstream out;
  out << "G = PSL(2,17) on 18 points, |G| = " << g.order().str() << "\n";
  out << "S4 inside G, |S4| = " << s4.order().str() << ", maximal: "
      << (maximal ? "yes" : "no") << "\n";
  for (auto p : g.order().primes()) {
    auto q = sylow(g, p, o.seed);
    out << "Sylow " << p << "-subgroup: order " << q.size() << ", p-part of |S4| is "
        << s4.order().p_part(p);
    if (s4.order().p_part(p) < q.size()) {
      out << ", so no Sylow " << p << "-subgroup fits inside S4";
    }
    if (p == 3) {
      // Explicit scan even though the orders already rule it out.
      auto conj = subgroup_conjugates(g, q);
      std::size_t inside = 0;
      for (auto const &t : conj.transversal)
        if (is_subgroup(conjugate_subgroup(q, t), s4))
          ++inside;
      out << "; scanned " << conj.transversal.size() << " conjugates, " << inside
          << " inside S4";
    }
    out << "\n";
  }
  out << "Theorem A conclusion for H = S4:\n"
      << report.counterexample_details.value_or("(conclusion holds)\n");
  report.counterexample_details = out.str();
  return report;
}

QuestionScan question_scan(std::vector<Subject> const &subjects, HarnessOptions const &o)
{
  QuestionScan scan;
  for (auto const &s : subjects) {
    auto const &g = s.group;
    std::vector<GeneratedGroup> maximals;
    try {
      maximals = non_normal_maximals(s);
    } catch (ResourceError const &e) {
      scan.skipped.emplace_back(s.name, e.what());
      continue;
    }
    try {
      for (auto p : g.order().primes()) {
        PrimeSet pi{p};
        if (!is_pi_solvable(g, pi))
          continue;
        for (auto const &m : maximals) {
          if (!is_prime_power_of(g.size() / m.size(), pi))
            continue;
          QuestionInstance inst;
          inst.group_name = s.name;
          inst.p = p;
          inst.maximal = m;
          auto core_m = core(g, m);
          inst.fitting_trivial = fitting_mod_core(m, core_m).is_trivial();
          if (inst.fitting_trivial) {
            inst.sylow_normalizer_inside = false;
            for (auto q : g.order().primes()) {
              auto r = search_sylow(g, m, q, o);
              if (r.status == InstanceStatus::contained) {
                inst.sylow_normalizer_inside = true;
                inst.sylow_prime = q;
                break;
              }
              if (r.status == InstanceStatus::inconclusive)
                inst.sylow_normalizer_inside.reset();
            }
          }
          scan.instances.push_back(std::move(inst));
        }
      }
    } catch (ResourceError const &e) {
      scan.skipped.emplace_back(s.name, e.what());
    }
  }
  return scan;
}

QuestionScan question_scan(std::optional<std::string> const &tag, HarnessOptions const &o)
{
  std::vector<Subject> subjects;
  QuestionScan skipped_large;
  for (auto const &e : catalog()) {
    if (tag && !e.has_tag(*tag))
      continue;
    if (e.expected_order.value() > enumeration_cap() && !e.supplied_maximals) {
      skipped_large.skipped.emplace_back(e.name, "order above the enumeration cap");
      continue;
    }
    subjects.push_back(subject_from_catalog(e.name));
  }
  auto scan = question_scan(subjects, o);
  scan.skipped.insert(scan.skipped.end(), skipped_large.skipped.begin(),
                      skipped_large.skipped.end());
  return scan;
}

} // namespace maxnorm
