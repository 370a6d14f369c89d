#include "ncfkit/analysis.hpp"

#include <sstream>

#include "ncfkit/complexity.hpp"

namespace ncfkit
{

namespace
{

std::string_view trim_view( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
  {
    s.remove_prefix( 1 );
  }
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
  {
    s.remove_suffix( 1 );
  }
  return s;
}

std::vector<unsigned> one_based( VarMask m )
{
  std::vector<unsigned> out;
  for ( auto v : mask_to_indices( m ) )
  {
    out.push_back( v + 1 );
  }
  return out;
}

std::string skip_reason( const char* oracle, unsigned n, unsigned cap )
{
  return std::string( "skipped: cap (" ) + oracle + " oracle limited to n <= " + std::to_string( cap ) + ", n=" +
         std::to_string( n ) + ")";
}

template<typename T>
void put_optional( Json& j, const char* key, const std::optional<T>& value )
{
  if ( value )
  {
    j[key] = *value;
  }
}

template<typename T>
std::optional<T> get_optional( const Json& j, const char* key )
{
  if ( j.contains( key ) )
  {
    return j.at( key ).get<T>();
  }
  return std::nullopt;
}

} // namespace

AnalysisReport analyze( const ParsedFunction& input, std::string_view text, const AnalyzeOptions& options )
{
  const auto& f = input.table;
  const auto n = f.num_vars();
  const auto& limits = options.limits;

  AnalysisReport r;
  r.input_format = to_string( input.format );
  r.input_text = std::string( trim_view( text ) );
  r.table = to_table_string( f );
  r.n = n;
  r.anf = to_string( to_anf( f ) );
  r.essential = one_based( essential_variables( f ) );
  r.monotone = to_string( is_monotone( f ) );

  const auto recognition = recognize( f );
  if ( const auto* spec = std::get_if<NcfLayerSpec>( &recognition ) )
  {
    const auto profile = profile_of( *spec );
    const auto bounds = sensitivity_bounds( profile );
    r.ncf_status = "ncf";
    r.ncf_spec = to_string( *spec );
    r.profile = profile.ks;
    r.layer_number = layer_number( *spec );
    r.sensitivity_formula = sensitivity_formula( profile );
    r.formula_lower_bound = bounds.lower;
    r.formula_upper_bound = bounds.upper;
  }
  else
  {
    const auto& failure = std::get<NotNcf>( recognition );
    if ( failure.stage == NotNcfStage::single_variable && !f.is_constant() )
    {
      r.ncf_status = "out_of_scope";
      r.not_ncf_reason = "canalyzing, out of NCF scope (NCFs need n >= 2)";
    }
    else
    {
      r.ncf_status = "not_ncf";
      r.not_ncf_stage = to_string( failure.stage == NotNcfStage::single_variable ? NotNcfStage::constant
                                                                                 : failure.stage );
      if ( failure.layer > 0 )
      {
        r.not_ncf_layer = failure.layer;
      }
      r.not_ncf_reason = failure.stage == NotNcfStage::single_variable ? "constant function" : failure.describe();
    }
  }

  if ( n <= limits.sensitivity_cap )
  {
    const auto s = sensitivity( f, limits );
    const auto avg = average_sensitivity( f, limits );
    r.sensitivity_oracle = s.value;
    r.sensitivity_witness = to_string( s.witness );
    r.average_sensitivity_numerator = avg.numerator;
    r.average_sensitivity_denominator = avg.denominator;
    if ( r.sensitivity_formula )
    {
      r.sensitivity_agree = *r.sensitivity_formula == s.value;
    }
  }
  else
  {
    r.sensitivity_skipped = skip_reason( "sensitivity", n, limits.sensitivity_cap );
  }

  if ( options.l && ( *options.l < 1 || *options.l > n ) )
  {
    throw InvalidArgument( "--l must be in 1.." + std::to_string( n ) );
  }
  if ( n <= limits.block_cap && n <= limits.sensitivity_cap )
  {
    const auto report = analyze_sensitivity( f, limits );
    r.block_sensitivity = report.bs;
    for ( unsigned l = 1; l <= n; ++l )
    {
      if ( !options.l || *options.l == l )
      {
        r.bs_l.emplace_back( l, report.bs_l[l - 1] );
      }
    }
    BlockWitness w;
    w.word = to_string( report.bs_witness );
    for ( auto b : report.bs_blocks )
    {
      w.blocks.push_back( one_based( b ) );
    }
    r.block_witness = std::move( w );
  }
  else
  {
    r.block_skipped = skip_reason( "block sensitivity", n, std::min( limits.block_cap, limits.sensitivity_cap ) );
  }
  return r;
}

AnalysisReport analyze_text( std::string_view text, const AnalyzeOptions& options )
{
  const auto parsed = parse_function( text, options.format, options.anf_vars, options.limits );
  return analyze( parsed, text, options );
}

Json to_json( const AnalysisReport& r )
{
  Json j;
  j["input"] = {{"format", r.input_format}, {"text", r.input_text}};
  j["n"] = r.n;
  j["table"] = r.table;
  j["anf"] = r.anf;
  j["essential"] = r.essential;
  j["monotone"] = r.monotone;

  Json ncf;
  ncf["status"] = r.ncf_status;
  put_optional( ncf, "spec", r.ncf_spec );
  if ( r.ncf_status == "ncf" )
  {
    ncf["profile"] = r.profile;
  }
  put_optional( ncf, "layer_number", r.layer_number );
  if ( r.formula_lower_bound && r.formula_upper_bound )
  {
    ncf["sensitivity_bounds"] = {{"lower", *r.formula_lower_bound}, {"upper", *r.formula_upper_bound}};
  }
  put_optional( ncf, "stage", r.not_ncf_stage );
  put_optional( ncf, "layer", r.not_ncf_layer );
  put_optional( ncf, "reason", r.not_ncf_reason );
  j["ncf"] = std::move( ncf );

  Json s = Json::object();
  put_optional( s, "formula", r.sensitivity_formula );
  put_optional( s, "oracle", r.sensitivity_oracle );
  put_optional( s, "agree", r.sensitivity_agree );
  put_optional( s, "witness", r.sensitivity_witness );
  if ( r.average_sensitivity_numerator && r.average_sensitivity_denominator )
  {
    s["average"] = {{"numerator", *r.average_sensitivity_numerator},
                    {"denominator", *r.average_sensitivity_denominator}};
  }
  put_optional( s, "skipped", r.sensitivity_skipped );
  j["sensitivity"] = std::move( s );

  Json bs = Json::object();
  put_optional( bs, "bs", r.block_sensitivity );
  if ( r.block_sensitivity )
  {
    Json per_l = Json::object();
    for ( const auto& [l, v] : r.bs_l )
    {
      per_l[std::to_string( l )] = v;
    }
    bs["bs_l"] = std::move( per_l );
  }
  if ( r.block_witness )
  {
    bs["witness"] = {{"word", r.block_witness->word}, {"blocks", r.block_witness->blocks}};
  }
  put_optional( bs, "skipped", r.block_skipped );
  j["block_sensitivity"] = std::move( bs );
  return j;
}

AnalysisReport report_from_json( const Json& j )
{
  AnalysisReport r;
  r.input_format = j.at( "input" ).at( "format" ).get<std::string>();
  r.input_text = j.at( "input" ).at( "text" ).get<std::string>();
  r.n = j.at( "n" ).get<unsigned>();
  r.table = j.at( "table" ).get<std::string>();
  r.anf = j.at( "anf" ).get<std::string>();
  r.essential = j.at( "essential" ).get<std::vector<unsigned>>();
  r.monotone = j.at( "monotone" ).get<std::string>();

  const auto& ncf = j.at( "ncf" );
  r.ncf_status = ncf.at( "status" ).get<std::string>();
  r.ncf_spec = get_optional<std::string>( ncf, "spec" );
  if ( ncf.contains( "profile" ) )
  {
    r.profile = ncf.at( "profile" ).get<std::vector<unsigned>>();
  }
  r.layer_number = get_optional<unsigned>( ncf, "layer_number" );
  if ( ncf.contains( "sensitivity_bounds" ) )
  {
    r.formula_lower_bound = ncf.at( "sensitivity_bounds" ).at( "lower" ).get<unsigned>();
    r.formula_upper_bound = ncf.at( "sensitivity_bounds" ).at( "upper" ).get<unsigned>();
  }
  r.not_ncf_stage = get_optional<std::string>( ncf, "stage" );
  r.not_ncf_layer = get_optional<unsigned>( ncf, "layer" );
  r.not_ncf_reason = get_optional<std::string>( ncf, "reason" );

  const auto& s = j.at( "sensitivity" );
  r.sensitivity_formula = get_optional<unsigned>( s, "formula" );
  r.sensitivity_oracle = get_optional<unsigned>( s, "oracle" );
  r.sensitivity_agree = get_optional<bool>( s, "agree" );
  r.sensitivity_witness = get_optional<std::string>( s, "witness" );
  if ( s.contains( "average" ) )
  {
    r.average_sensitivity_numerator = s.at( "average" ).at( "numerator" ).get<std::uint64_t>();
    r.average_sensitivity_denominator = s.at( "average" ).at( "denominator" ).get<std::uint64_t>();
  }
  r.sensitivity_skipped = get_optional<std::string>( s, "skipped" );

  const auto& bs = j.at( "block_sensitivity" );
  r.block_sensitivity = get_optional<unsigned>( bs, "bs" );
  if ( bs.contains( "bs_l" ) )
  {
    for ( const auto& [key, value] : bs.at( "bs_l" ).items() )
    {
      r.bs_l.emplace_back( static_cast<unsigned>( std::stoul( key ) ), value.get<unsigned>() );
    }
  }
  if ( bs.contains( "witness" ) )
  {
    r.block_witness = BlockWitness{bs.at( "witness" ).at( "word" ).get<std::string>(),
                                   bs.at( "witness" ).at( "blocks" ).get<std::vector<std::vector<unsigned>>>()};
  }
  r.block_skipped = get_optional<std::string>( bs, "skipped" );
  return r;
}

std::string render_text( const Json& j )
{
  std::ostringstream out;
  out << "input       " << j["input"]["text"].get<std::string>() << " (" << j["input"]["format"].get<std::string>()
      << ")\n";
  out << "n           " << j["n"].get<unsigned>() << "\n";
  out << "table       " << j["table"].get<std::string>() << "\n";
  out << "anf         " << j["anf"].get<std::string>() << "\n";
  out << "essential   {";
  bool first = true;
  for ( const auto& v : j["essential"] )
  {
    out << ( first ? "" : "," ) << v.get<unsigned>();
    first = false;
  }
  out << "}\n";
  out << "monotone    " << j["monotone"].get<std::string>() << "\n";

  const auto& ncf = j["ncf"];
  const auto status = ncf["status"].get<std::string>();
  if ( status == "ncf" )
  {
    out << "ncf         " << ncf["spec"].get<std::string>() << "\n";
    out << "profile     [";
    first = true;
    for ( const auto& k : ncf["profile"] )
    {
      out << ( first ? "" : "," ) << k.get<unsigned>();
      first = false;
    }
    out << "], layer number " << ncf["layer_number"].get<unsigned>() << "\n";
    out << "bounds      " << ncf["sensitivity_bounds"]["lower"].get<unsigned>() << " <= s <= "
        << ncf["sensitivity_bounds"]["upper"].get<unsigned>() << "\n";
  }
  else
  {
    out << "ncf         " << status << ": " << ncf["reason"].get<std::string>() << "\n";
  }

  const auto& s = j["sensitivity"];
  if ( s.contains( "formula" ) )
  {
    out << "s (formula) " << s["formula"].get<unsigned>() << "\n";
  }
  if ( s.contains( "oracle" ) )
  {
    out << "s (oracle)  " << s["oracle"].get<unsigned>() << " at " << s["witness"].get<std::string>();
    if ( s.contains( "agree" ) )
    {
      out << ( s["agree"].get<bool>() ? ", agrees with formula" : ", DISAGREES with formula" );
    }
    out << "\n";
    out << "avg s       " << s["average"]["numerator"].get<std::uint64_t>() << "/"
        << s["average"]["denominator"].get<std::uint64_t>() << "\n";
  }
  else
  {
    out << "s (oracle)  " << s["skipped"].get<std::string>() << "\n";
  }

  const auto& bs = j["block_sensitivity"];
  if ( bs.contains( "bs" ) )
  {
    out << "bs          " << bs["bs"].get<unsigned>() << " at " << bs["witness"]["word"].get<std::string>()
        << " blocks";
    for ( const auto& block : bs["witness"]["blocks"] )
    {
      out << " {";
      first = true;
      for ( const auto& v : block )
      {
        out << ( first ? "" : "," ) << v.get<unsigned>();
        first = false;
      }
      out << "}";
    }
    out << "\n";
    for ( const auto& [l, v] : bs["bs_l"].items() )
    {
      out << "bs_" << l << ( l.size() == 1 ? "        " : "       " ) << v.get<unsigned>() << "\n";
    }
  }
  else
  {
    out << "bs          " << bs["skipped"].get<std::string>() << "\n";
  }
  return out.str();
}

} // namespace ncfkit
