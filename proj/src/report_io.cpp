#include "maxnorm/report_io.hpp"

#include <sstream>

#include "maxnorm/errors.hpp"

namespace maxnorm
{

using nlohmann::json;

Format parse_format(std::string const &name)
{
  if (name == "text")
    return Format::text;
  if (name == "json")
    return Format::json;
  throw UnknownName("unknown format '" + name + "' (expected text or json)");
}

json generators_json(GeneratedGroup const &g)
{
  json out = json::array();
  for (auto const &x : g.generators())
    if (!x.is_identity())
      out.push_back(x.str());
  return out;
}

namespace
{

std::string gens_text(GeneratedGroup const &g)
{
  if (g.is_trivial())
    return "1";
  std::string out = "<";
  bool first = true;
  for (auto const &x : g.generators()) {
    if (x.is_identity())
      continue;
    out += (first ? "" : ", ") + x.str();
    first = false;
  }
  return out + ">";
}

std::string dump(json const &j)
{
  return j.dump(2) + "\n";
}

} // namespace

json to_json(VerificationReport const &r)
{
  json j;
  j["group"] = r.group_name;
  j["theorem"] = theorem_label(r.theorem);
  j["verdict"] = verdict_name(r.verdict);
  j["hypotheses"] = json::array();
  for (auto const &[name, holds] : r.hypotheses)
    j["hypotheses"].push_back({{"name", name}, {"holds", holds}});
  j["notes"] = r.notes;
  j["instances"] = json::array();
  for (auto const &w : r.instances) {
    json i;
    i["maximal_gens"] = generators_json(w.maximal);
    i["maximal_order"] = w.maximal.size();
    i["core_gens"] = generators_json(w.core);
    if (w.q)
      i["q"] = *w.q;
    if (w.pi)
      i["omega"] = w.pi->primes();
    i["witness_gens"] = w.witness_subgroup ? generators_json(*w.witness_subgroup) : json();
    i["normalizer_gens"] =
      w.witness_normalizer ? generators_json(*w.witness_normalizer) : json();
    i["contained"] = w.contained();
    i["status"] = status_name(w.status);
    i["note"] = w.note;
    j["instances"].push_back(std::move(i));
  }
  if (r.counterexample_details)
    j["counterexample_details"] = *r.counterexample_details;
  return j;
}

json to_json(std::string const &name, StructureReport const &r)
{
  json j;
  j["group"] = name;
  j["order"] = r.order.value();
  json f = json::object();
  for (auto const &[p, e] : r.order.factorization())
    f[std::to_string(p)] = e;
  j["factorization"] = f;
  j["solvable"] = r.solvable;
  j["nilpotent"] = r.nilpotent;
  j["fitting_gens"] = generators_json(r.fitting);
  j["fitting_order"] = r.fitting.size();
  if (r.frattini) {
    j["frattini_gens"] = generators_json(*r.frattini);
    j["frattini_order"] = r.frattini->size();
  }
  if (r.maximal_classes) {
    j["maximal_classes"] = json::array();
    for (auto const &c : *r.maximal_classes)
      j["maximal_classes"].push_back({{"gens", generators_json(c.representative)},
                                      {"order", c.representative.size()},
                                      {"class_size", c.class_size},
                                      {"normal", c.normal}});
  }
  return j;
}

json to_json(QuestionScan const &scan)
{
  json j;
  j["instances"] = json::array();
  for (auto const &i : scan.instances) {
    json x;
    x["group"] = i.group_name;
    x["p"] = i.p;
    x["maximal_gens"] = generators_json(i.maximal);
    x["maximal_order"] = i.maximal.size();
    x["fitting_trivial"] = i.fitting_trivial;
    if (i.fitting_trivial) {
      x["sylow_normalizer_inside"] =
        i.sylow_normalizer_inside ? json(*i.sylow_normalizer_inside) : json();
      if (i.sylow_prime)
        x["sylow_prime"] = *i.sylow_prime;
    }
    j["instances"].push_back(std::move(x));
  }
  j["skipped"] = json::array();
  for (auto const &[name, why] : scan.skipped)
    j["skipped"].push_back({{"group", name}, {"reason", why}});
  return j;
}

json to_json(LemmaSweep const &sweep)
{
  auto tally = [](LemmaTally const &t) {
    return json{{"checked", t.checked}, {"held", t.held}, {"excluded", t.excluded}};
  };
  return {{"group", sweep.group_name},
          {"lemma1", tally(sweep.lemma1)},
          {"lemma2", tally(sweep.lemma2)},
          {"lemma3", tally(sweep.lemma3)},
          {"all_hold", sweep.all_hold()}};
}

std::string write_report(VerificationReport const &r, Format format)
{
  if (format == Format::json)
    return dump(to_json(r));

  std::ostringstream out;
  out << "group " << r.group_name << "  theorem " << theorem_label(r.theorem) << "  verdict "
      << verdict_name(r.verdict) << "\n";
  for (auto const &[name, holds] : r.hypotheses)
    out << "  hypothesis: " << name << ": " << (holds ? "yes" : "no") << "\n";
  for (auto const &n : r.notes)
    out << "  note: " << n << "\n";
  for (auto const &w : r.instances) {
    out << "  H = " << gens_text(w.maximal) << " |H| = " << w.maximal.size()
        << " core " << gens_text(w.core);
    if (w.q)
      out << " q = " << *w.q;
    if (w.pi)
      out << " omega = " << w.pi->str();
    out << ": " << status_name(w.status);
    if (w.witness_subgroup)
      out << "  witness " << gens_text(*w.witness_subgroup);
    if (w.witness_normalizer)
      out << "  normalizer " << gens_text(*w.witness_normalizer) << " (order "
          << w.witness_normalizer->size() << ")";
    if (!w.note.empty())
      out << "  [" << w.note << "]";
    out << "\n";
  }
  if (r.counterexample_details) {
    std::istringstream lines(*r.counterexample_details);
    std::string line;
    while (std::getline(lines, line))
      out << "  | " << line << "\n";
  }
  return out.str();
}

std::string write_reports(std::vector<VerificationReport> const &reports, Format format)
{
  if (format == Format::json) {
    json j = json::array();
    for (auto const &r : reports)
      j.push_back(to_json(r));
    return dump(j);
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i)
    out += (i ? "\n" : "") + write_report(reports[i], format);
  return out;
}

std::string write_structure(std::string const &name, StructureReport const &r, Format format)
{
  if (format == Format::json)
    return dump(to_json(name, r));

  std::ostringstream out;
  out << "group " << name << "\n";
  out << "  order " << r.order.str() << "\n";
  out << "  solvable " << (r.solvable ? "yes" : "no") << ", nilpotent "
      << (r.nilpotent ? "yes" : "no") << "\n";
  out << "  Fitting subgroup " << gens_text(r.fitting) << " (order " << r.fitting.size() << ")\n";
  if (r.frattini)
    out << "  Frattini subgroup " << gens_text(*r.frattini) << " (order " << r.frattini->size()
        << ")\n";
  if (r.maximal_classes) {
    out << "  maximal subgroup classes: " << r.maximal_classes->size() << "\n";
    for (auto const &c : *r.maximal_classes)
      out << "    order " << c.representative.size() << ", " << c.class_size
          << (c.class_size == 1 ? " conjugate" : " conjugates")
          << (c.normal ? ", normal" : "") << ": " << gens_text(c.representative) << "\n";
  } else {
    out << "  maximal subgroups not enumerated (order above the enumeration cap)\n";
  }
  return out.str();
}

std::string write_scan(QuestionScan const &scan, Format format)
{
  if (format == Format::json)
    return dump(to_json(scan));

  std::ostringstream out;
  out << "instances: " << scan.instances.size() << "\n";
  for (auto const &i : scan.instances) {
    out << "  " << i.group_name << " p = " << i.p << " |M| = " << i.maximal.size()
        << " F(M/Core) " << (i.fitting_trivial ? "= 1" : "!= 1");
    if (i.fitting_trivial) {
      out << "; some Sylow normalizer inside M: ";
      if (!i.sylow_normalizer_inside)
        out << "unknown (budget)";
      else if (*i.sylow_normalizer_inside)
        out << "yes (q = " << *i.sylow_prime << ")";
      else
        out << "no";
    }
    out << "\n";
  }
  for (auto const &[name, why] : scan.skipped)
    out << "  skipped " << name << ": " << why << "\n";
  out << "empirical observations only; nothing here is asserted as a theorem\n";
  return out.str();
}

std::string write_lemma_sweeps(std::vector<LemmaSweep> const &sweeps, Format format)
{
  if (format == Format::json) {
    json j = json::array();
    for (auto const &s : sweeps)
      j.push_back(to_json(s));
    return dump(j);
  }
  std::ostringstream out;
  auto line = [&](char const *name, LemmaTally const &t) {
    out << "  " << name << ": " << t.held << "/" << t.checked << " hold, " << t.excluded
        << " excluded by hypotheses\n";
  };
  for (auto const &s : sweeps) {
    out << "group " << s.group_name << (s.all_hold() ? "" : "  FAILURES") << "\n";
    line("lemma 1", s.lemma1);
    line("lemma 2", s.lemma2);
    line("lemma 3", s.lemma3);
  }
  return out.str();
}

} // namespace maxnorm
