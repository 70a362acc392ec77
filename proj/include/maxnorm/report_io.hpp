#ifndef MAXNORM_REPORT_IO_HPP
#define MAXNORM_REPORT_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "maxnorm/harness.hpp"
#include "maxnorm/structure.hpp"

namespace maxnorm
{

enum class Format
{
  text,
  json,
};

/// "text" or "json"; throws UnknownName.
Format parse_format(std::string const &name);

/// Generators in cycle notation, e.g. ["(1 2)", "(1 2 3)"].
nlohmann::json generators_json(GeneratedGroup const &g);

// Reports serialize deterministically. The JSON form of a verification
// report is
//   {group, theorem, verdict, hypotheses: [{name, holds}], notes: [...],
//    instances: [{maximal_gens, maximal_order, core_gens, q | omega,
//                 witness_gens, normalizer_gens, contained, status, note}],
//    counterexample_details?}

nlohmann::json to_json(VerificationReport const &r);
nlohmann::json to_json(std::string const &name, StructureReport const &r);
nlohmann::json to_json(QuestionScan const &scan);
nlohmann::json to_json(LemmaSweep const &sweep);

/// Text: one line per instance, with witness generators.
std::string write_report(VerificationReport const &r, Format format);
/// Several reports: a JSON array, or text blocks separated by blank lines.
std::string write_reports(std::vector<VerificationReport> const &reports, Format format);
std::string write_structure(std::string const &name, StructureReport const &r, Format format);
std::string write_scan(QuestionScan const &scan, Format format);
std::string write_lemma_sweeps(std::vector<LemmaSweep> const &sweeps, Format format);

} // namespace maxnorm

#endif // MAXNORM_REPORT_IO_HPP
