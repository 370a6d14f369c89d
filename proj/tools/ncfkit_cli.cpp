#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ncfkit/analysis.hpp"
#include "ncfkit/mncf.hpp"
#include "ncfkit/text_io.hpp"

namespace
{

using namespace ncfkit;

enum ExitCode
{
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailed = 2,
  kCapExceeded = 3
};

struct Options
{
  std::string input;
  std::string format = "auto";
  bool json = false;
  std::uint64_t seed = 20240101;
  unsigned sample = 0;
  std::optional<unsigned> max_n;
  unsigned min_n = 2;
  std::string profile;
  bool count_only = false;
  std::optional<unsigned> l;
  std::optional<unsigned> vars;
  std::string kind;
  unsigned n = 0;
  std::string suite = "all";
};

Limits analysis_limits( const Options& o )
{
  Limits limits;
  if ( o.max_n )
  {
    limits.sensitivity_cap = *o.max_n;
    limits.block_cap = *o.max_n;
    limits.max_vars = std::max( limits.max_vars, *o.max_n );
  }
  return limits;
}

/// Runs `handle` on the argument, or on every nonempty stdin line when no argument is given.
template<typename Handle>
int for_each_input( const Options& o, Handle&& handle )
{
  if ( !o.input.empty() )
  {
    handle( o.input );
    return kSuccess;
  }
  std::string line;
  while ( std::getline( std::cin, line ) )
  {
    if ( line.find_first_not_of( " \t\r" ) == std::string::npos )
    {
      continue;
    }
    handle( line );
  }
  return kSuccess;
}

int cmd_analyze( const Options& o )
{
  AnalyzeOptions options;
  options.limits = analysis_limits( o );
  options.format = parse_format_name( o.format );
  options.anf_vars = o.vars;
  options.l = o.l;
  return for_each_input( o, [&]( const std::string& text ) {
    const auto report = to_json( analyze_text( text, options ) );
    if ( o.json )
    {
      std::cout << report.dump() << "\n";
    }
    else
    {
      std::cout << render_text( report );
      if ( o.input.empty() )
      {
        std::cout << "\n";
      }
    }
  } );
}

int cmd_recognize( const Options& o )
{
  const auto limits = analysis_limits( o );
  const auto format = parse_format_name( o.format );
  return for_each_input( o, [&]( const std::string& text ) {
    const auto parsed = parse_function( text, format, o.vars, limits );
    const auto result = recognize( parsed.table );
    Json j;
    j["table"] = to_table_string( parsed.table );
    if ( const auto* spec = std::get_if<NcfLayerSpec>( &result ) )
    {
      j["status"] = "ncf";
      j["spec"] = to_string( *spec );
      j["profile"] = profile_of( *spec ).ks;
      j["layer_number"] = layer_number( *spec );
    }
    else
    {
      const auto& failure = std::get<NotNcf>( result );
      const bool out_of_scope = failure.stage == NotNcfStage::single_variable && !parsed.table.is_constant();
      j["status"] = out_of_scope ? "out_of_scope" : "not_ncf";
      j["stage"] = to_string( failure.stage );
      if ( failure.layer > 0 )
      {
        j["layer"] = failure.layer;
      }
      j["reason"] = out_of_scope ? "canalyzing, out of NCF scope" : failure.describe();
    }
    if ( o.json )
    {
      std::cout << j.dump() << "\n";
    }
    else if ( j["status"] == "ncf" )
    {
      std::cout << j["spec"].get<std::string>() << "\n";
    }
    else
    {
      std::cout << j["status"].get<std::string>() << ": " << j["reason"].get<std::string>() << "\n";
    }
  } );
}

int cmd_enumerate( const Options& o )
{
  Limits limits;
  if ( o.max_n )
  {
    limits.ncf_enum_cap = *o.max_n;
    limits.mncf_enum_cap = *o.max_n;
  }
  std::optional<Profile> only;
  if ( !o.profile.empty() )
  {
    only = parse_profile( o.profile );
  }

  std::uint64_t total = 0;
  auto emit = [&]( const NcfLayerSpec& spec ) {
    ++total;
    if ( o.count_only )
    {
      return;
    }
    if ( o.json )
    {
      Json j{{"spec", to_string( spec )}, {"table", to_table_string( construct( spec ) )}};
      std::cout << j.dump() << "\n";
    }
    else
    {
      std::cout << to_string( spec ) << "\n";
    }
  };

  if ( o.kind == "ncf" )
  {
    auto stream = only ? NcfStream( o.n, *only, limits ) : NcfStream( o.n, limits );
    while ( auto spec = stream.next() )
    {
      emit( *spec );
    }
  }
  else if ( o.kind == "mncf" )
  {
    auto stream = only ? MncfStream( o.n, *only, limits ) : MncfStream( o.n, limits );
    while ( auto spec = stream.next() )
    {
      emit( spec->to_ncf() );
    }
  }
  else
  {
    throw ParseError( 0, o.kind, "kind must be ncf or mncf" );
  }

  if ( o.count_only )
  {
    if ( o.json )
    {
      std::cout << Json{{"kind", o.kind}, {"n", o.n}, {"total", total}}.dump() << "\n";
    }
    else
    {
      std::cout << total << "\n";
    }
  }
  return kSuccess;
}

int cmd_count( const Options& o )
{
  Limits limits;
  if ( o.max_n )
  {
    limits.max_vars = *o.max_n;
  }
  const auto table = count_mncf( o.n, limits );
  // Written by hand: counts outgrow 64 bits and JSON numbers have no size limit.
  std::cout << "{\"n\":" << table.n << ",\"total\":" << table.mncf_count << ",\"per_profile\":{";
  bool first = true;
  for ( const auto& [profile, term] : table.per_profile )
  {
    std::cout << ( first ? "" : "," ) << "\"" << to_string( profile ) << "\":" << term;
    first = false;
  }
  std::cout << "}}\n";
  return kSuccess;
}

int cmd_verify( const Options& o )
{
  VerifyOptions options;
  options.min_n = o.min_n;
  options.max_n = o.max_n.value_or( 5 );
  options.sample = o.sample;
  options.seed = o.seed;
  const auto summary = verify( parse_suite( o.suite ), options );
  if ( o.json )
  {
    std::cout << to_json( summary ).dump() << "\n";
  }
  else
  {
    std::cout << render_text( summary );
  }
  return summary.passed() ? kSuccess : kVerificationFailed;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{"Nested canalyzing function analysis: recognition, sensitivity and block sensitivity, MNCF counting"};
  app.require_subcommand( 1 );
  Options o;

  auto add_function_flags = [&]( CLI::App* cmd ) {
    cmd->add_option( "input", o.input, "Function text; read one per line from stdin when omitted" );
    cmd->add_option( "--format", o.format, "auto, table, hex, anf or layers" )->capture_default_str();
    cmd->add_option( "--vars", o.vars, "Variable count for anf input (default: largest index used)" );
    cmd->add_option( "--max-n", o.max_n, "Oracle cap: run exact sensitivity oracles up to this n" );
    cmd->add_flag( "--json", o.json, "Emit JSON" );
  };

  auto* analyze = app.add_subcommand( "analyze", "Full report: NCF structure, sensitivity, block sensitivity" );
  add_function_flags( analyze );
  analyze->add_option( "--l", o.l, "Report only bs_l for this l" );

  auto* recognize_cmd = app.add_subcommand( "recognize", "Canonical layer form, or the reason a function is not an NCF" );
  add_function_flags( recognize_cmd );

  auto* enumerate = app.add_subcommand( "enumerate", "Stream every NCF or monotone NCF on n variables" );
  enumerate->add_option( "kind", o.kind, "ncf or mncf" )->required();
  enumerate->add_option( "n", o.n, "Variable count" )->required();
  enumerate->add_option( "--profile", o.profile, "Only this layer-size profile, e.g. 1,2" );
  enumerate->add_flag( "--count-only", o.count_only, "Print only the number of functions" );
  enumerate->add_option( "--max-n", o.max_n, "Raise the enumeration cap" );
  enumerate->add_flag( "--json", o.json, "Emit JSON lines" );

  auto* count = app.add_subcommand( "count", "Exact number of monotone NCFs, with per-profile terms (JSON)" );
  count->add_option( "n", o.n, "Variable count" )->required();
  count->add_option( "--max-n", o.max_n, "Raise the variable cap" );
  count->add_flag( "--json", o.json, "Accepted for symmetry; output is always JSON" );

  auto* verify_cmd = app.add_subcommand( "verify", "Re-check the closed-form results against the exact oracles" );
  verify_cmd->add_option( "--suite", o.suite, "formula, bs_eq_s, mncf, bounds, invariance or all" )
      ->capture_default_str();
  verify_cmd->add_option( "--min-n", o.min_n, "Smallest n" )->capture_default_str();
  verify_cmd->add_option( "--max-n", o.max_n, "Largest n (default 5)" );
  verify_cmd->add_option( "--sample", o.sample, "Random population size where checks are sampled" );
  verify_cmd->add_option( "--seed", o.seed, "Seed for sampled populations" )->capture_default_str();
  verify_cmd->add_flag( "--json", o.json, "Emit JSON" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return kUsageError;
  }

  try
  {
    if ( analyze->parsed() )
      return cmd_analyze( o );
    if ( recognize_cmd->parsed() )
      return cmd_recognize( o );
    if ( enumerate->parsed() )
      return cmd_enumerate( o );
    if ( count->parsed() )
      return cmd_count( o );
    if ( verify_cmd->parsed() )
      return cmd_verify( o );
  }
  catch ( const CapExceeded& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  }
  catch ( const Error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
