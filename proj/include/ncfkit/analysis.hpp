#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "common.hpp"
#include "ncf.hpp"
#include "text_io.hpp"
#include "truth_table.hpp"

namespace ncfkit
{

using Json = nlohmann::ordered_json;

struct BlockWitness
{
  std::string word;
  /// Blocks as 1-based index lists.
  std::vector<std::vector<unsigned>> blocks;

  bool operator==( const BlockWitness& ) const = default;
};

/*! \brief Everything `analyze` reports about one function.

  Optional oracle fields are empty when the function exceeds the oracle caps;
  the matching `*_skipped` string then says why. Values are never estimated.
*/
struct AnalysisReport
{
  std::string input_format;
  std::string input_text;
  std::string table;
  unsigned n = 0;
  std::string anf;
  std::vector<unsigned> essential;
  std::string monotone;

  // "ncf", "not_ncf" or "out_of_scope"
  std::string ncf_status;
  std::optional<std::string> ncf_spec;
  std::optional<std::string> not_ncf_stage;
  std::optional<unsigned> not_ncf_layer;
  std::optional<std::string> not_ncf_reason;
  std::vector<unsigned> profile;
  std::optional<unsigned> layer_number;
  std::optional<unsigned> formula_lower_bound;
  std::optional<unsigned> formula_upper_bound;

  std::optional<unsigned> sensitivity_formula;
  std::optional<unsigned> sensitivity_oracle;
  std::optional<bool> sensitivity_agree;
  std::optional<std::string> sensitivity_witness;
  std::optional<std::uint64_t> average_sensitivity_numerator;
  std::optional<std::uint64_t> average_sensitivity_denominator;
  std::optional<std::string> sensitivity_skipped;

  std::optional<unsigned> block_sensitivity;
  /// (l, bs_l) pairs in ascending l.
  std::vector<std::pair<unsigned, unsigned>> bs_l;
  std::optional<BlockWitness> block_witness;
  std::optional<std::string> block_skipped;

  bool operator==( const AnalysisReport& ) const = default;
};

struct AnalyzeOptions
{
  Limits limits;
  InputFormat format = InputFormat::automatic;
  std::optional<unsigned> anf_vars;
  /// Report only this bs_l instead of all l = 1..n.
  std::optional<unsigned> l;
};

AnalysisReport analyze( const ParsedFunction& input, std::string_view text, const AnalyzeOptions& options = {} );
AnalysisReport analyze_text( std::string_view text, const AnalyzeOptions& options = {} );

Json to_json( const AnalysisReport& report );
AnalysisReport report_from_json( const Json& j );

/// Human-readable rendering of a serialized report.
std::string render_text( const Json& report );

enum class Suite
{
  formula,
  bs_eq_s,
  mncf,
  bounds,
  invariance,
  all
};

Suite parse_suite( std::string_view name );
const char* to_string( Suite suite );

struct VerifyOptions
{
  unsigned min_n = 2;
  unsigned max_n = 5;
  /// Random population size per n where exhaustive checking is not used; 0 picks the suite default.
  unsigned sample = 0;
  std::uint64_t seed = 20240101;
  Limits limits;
};

struct VerifyOutcome
{
  std::string suite;
  unsigned n = 0;
  std::string mode; // exhaustive or sampled
  std::uint64_t checked = 0;
  bool passed = true;
  std::string detail;
  /// Minimal failing instance: table, word, blocks.
  std::optional<std::string> counterexample;
};

struct VerifySummary
{
  std::vector<VerifyOutcome> outcomes;

  bool passed() const;
};

VerifySummary verify( Suite suite, const VerifyOptions& options );

Json to_json( const VerifySummary& summary );
std::string render_text( const VerifySummary& summary );

} // namespace ncfkit
