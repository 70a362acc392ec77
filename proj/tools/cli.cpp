#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "maxnorm/catalog.hpp"
#include "maxnorm/errors.hpp"
#include "maxnorm/harness.hpp"
#include "maxnorm/report_io.hpp"
#include "maxnorm/structure.hpp"

namespace maxnorm::cli
{

namespace
{

struct Config
{
  std::string format = "text";
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t cap_order = 0;
  std::uint64_t interval_cap = 512;
  std::uint64_t scan_budget = 10000;

  std::string group;
  std::string theorem;
  bool all_catalog = false;
  std::uint64_t p = 0;
  std::string pi;
  std::string example;
  std::string filter;
};

class UsageError : public Error
{
public:
  using Error::Error;
};

Subject resolve_group(std::string const &source)
{
  for (auto const &e : catalog())
    if (e.name == source)
      return subject_from_catalog(source);

  if (!std::filesystem::is_regular_file(source))
    throw UsageError("'" + source + "' is neither a catalog group nor a readable file");
  std::ifstream in(source);
  std::stringstream text;
  text << in.rdbuf();
  auto spec = parse_group_spec(text.str());
  return {spec.name.value_or(source), group_from_spec(spec), std::nullopt};
}

// Runs fn over 0..n-1 on up to `jobs` threads; results land by index.
template<typename T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, std::function<T(std::size_t)> const &fn)
{
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t)
    threads.emplace_back(worker);
  worker();
  for (auto &t : threads)
    t.join();

  std::vector<T> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i])
      std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

int exit_code_for(std::vector<VerificationReport> const &reports)
{
  auto any = [&](Verdict v) {
    return std::any_of(reports.begin(), reports.end(),
                       [&](VerificationReport const &r) { return r.verdict == v; });
  };
  if (any(Verdict::failed))
    return kConclusionFailed;
  if (any(Verdict::hypotheses_not_met))
    return kHypothesesNotMet;
  if (any(Verdict::inconclusive))
    return kResourceCap;
  return kVerified;
}

HarnessOptions harness_options(Config const &c)
{
  HarnessOptions o;
  o.seed = c.seed;
  o.interval_cap = c.interval_cap;
  o.conjugate_budget = c.scan_budget;
  return o;
}

std::optional<PrimeSet> pi_option(Config const &c)
{
  if (c.pi.empty())
    return std::nullopt;
  try {
    return parse_prime_set(c.pi);
  } catch (Error const &e) {
    throw UsageError(std::string("--pi: ") + e.what());
  }
}

int cmd_inspect(Config const &c, std::ostream &out)
{
  auto s = resolve_group(c.group);
  out << write_structure(s.name, analyze(s.group), parse_format(c.format));
  return kVerified;
}

int cmd_verify(Config const &c, std::ostream &out)
{
  auto id = parse_theorem(c.theorem);
  auto pi = pi_option(c);
  if (id == TheoremId::T2 && c.p == 0)
    throw UsageError("theorem 2 needs --p");
  if (id == TheoremId::T3 && !pi && c.p == 0)
    throw UsageError("theorem 3 needs --pi (or --p)");
  if (c.p != 0 && !is_prime(c.p))
    throw UsageError("--p must be prime");
  if (c.all_catalog == !c.group.empty())
    throw UsageError("give exactly one of a group or --all-catalog");

  auto options = harness_options(c);
  PrimeSet t3_pi = pi ? *pi : (c.p ? PrimeSet{c.p} : PrimeSet{});
  auto verify = [&](Subject const &s) {
    switch (id) {
    case TheoremId::A: return verify_theorem_A(s, options);
    case TheoremId::T1: return verify_theorem_1(s, options);
    case TheoremId::C11: return verify_corollary_1_1(s, options);
    case TheoremId::C12: return verify_corollary_1_2(s, options);
    case TheoremId::T2: return verify_theorem_2(s, c.p, options);
    case TheoremId::T3: return verify_theorem_3(s, t3_pi, options);
    }
    throw UsageError("unknown theorem");
  };

  std::vector<std::string> names;
  if (c.all_catalog) {
    for (auto const &e : catalog())
      if (e.has_tag("solvable"))
        names.push_back(e.name);
  }

  std::vector<VerificationReport> reports;
  if (c.all_catalog) {
    reports = parallel_map<VerificationReport>(
      names.size(), c.jobs, [&](std::size_t i) { return verify(subject_from_catalog(names[i])); });
    std::sort(reports.begin(), reports.end(), [](auto const &a, auto const &b) {
      return a.group_name < b.group_name;
    });
  } else {
    reports.push_back(verify(resolve_group(c.group)));
  }

  auto format = parse_format(c.format);
  out << (c.all_catalog ? write_reports(reports, format) : write_report(reports[0], format));
  return exit_code_for(reports);
}

int cmd_counterexample(Config const &c, std::ostream &out)
{
  if (c.example != "psl217")
    throw UsageError("unknown counterexample '" + c.example + "' (expected psl217)");
  auto report = psl217_counterexample_demo(harness_options(c));
  out << write_report(report, parse_format(c.format));
  return exit_code_for({report});
}

int cmd_scan(Config const &c, std::ostream &out)
{
  std::optional<std::string> tag;
  if (!c.filter.empty())
    tag = c.filter;
  out << write_scan(question_scan(tag, harness_options(c)), parse_format(c.format));
  return kVerified;
}

int cmd_lemmas(Config const &c, std::ostream &out)
{
  auto s = resolve_group(c.group);
  auto sweep = check_lemmas(s, pi_option(c));
  out << write_lemma_sweeps({sweep}, parse_format(c.format));
  return sweep.all_hold() ? kVerified : kConclusionFailed;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  Config c;
  CLI::App app{"Checks normalizer-containment theorems for maximal subgroups of finite "
               "permutation groups."};
  app.name("maxnorm");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--format", c.format, "Output format")
    ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", c.jobs, "Groups verified in parallel")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Seed for randomized searches");
  app.add_option("--cap-order", c.cap_order,
                 "Largest order whose subgroup lattice is enumerated "
                 "(default: MAXNORM_CAP_ORDER or 2000)")
    ->check(CLI::PositiveNumber);
  app.add_option("--interval-cap", c.interval_cap, "Largest |H:Q| for Corollary 1.1 intervals")
    ->check(CLI::PositiveNumber);
  app.add_option("--scan-budget", c.scan_budget, "Conjugates scanned per witness search")
    ->check(CLI::PositiveNumber);

  auto inspect = app.add_subcommand("inspect", "Structure report for a group");
  inspect->add_option("group", c.group, "Catalog name or group file")->required();

  auto verify = app.add_subcommand("verify", "Verify a theorem on a group");
  verify->add_option("theorem", c.theorem, "A, 1, 1.1, 1.2, 2 or 3")->required();
  verify->add_option("group", c.group, "Catalog name or group file");
  verify->add_flag("--all-catalog", c.all_catalog, "Every solvable catalog group");
  verify->add_option("--p", c.p, "Prime for theorem 2 (or theorem 3 with pi = {p})");
  verify->add_option("--pi", c.pi, "Prime set for theorem 3, e.g. 2,3");

  auto counter = app.add_subcommand("counterexample", "Run a known counterexample");
  counter->add_option("name", c.example, "psl217")->required();

  auto scan = app.add_subcommand("scan-question",
                                 "Empirical scan of p-solvable groups with maximal "
                                 "subgroups of p-power index");
  scan->add_option("--filter", c.filter, "Only catalog groups with this tag");

  auto lemmas = app.add_subcommand("check-lemmas", "Sweep the three lemmas over a group");
  lemmas->add_option("group", c.group, "Catalog name or group file")->required();
  lemmas->add_option("--pi", c.pi, "Prime set (default: every nonempty subset)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  if (c.cap_order != 0)
    setenv("MAXNORM_CAP_ORDER", std::to_string(c.cap_order).c_str(), 1);

  try {
    if (*inspect)
      return cmd_inspect(c, out);
    if (*verify)
      return cmd_verify(c, out);
    if (*counter)
      return cmd_counterexample(c, out);
    if (*scan)
      return cmd_scan(c, out);
    if (*lemmas)
      return cmd_lemmas(c, out);
  } catch (ResourceError const &e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (UsageError const &e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (UnknownName const &e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (ParseError const &e) {
    err << "group file: " << e.what() << "\n";
    return kUsage;
  } catch (PreconditionError const &e) {
    err << "precondition: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

} // namespace maxnorm::cli
