#include "ncfkit/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ncfkit/complexity.hpp"
#include "ncfkit/mncf.hpp"

namespace ncfkit
{

namespace
{

constexpr unsigned kFormulaExhaustiveMax = 5;
constexpr unsigned kBlockExhaustiveMax = 4;
constexpr unsigned kMncfBruteForceMax = 4;
constexpr unsigned kMncfSpotCheckMax = 6;

constexpr unsigned kDefaultFormulaSample = 1000;
constexpr unsigned kDefaultBlockSample = 200;
constexpr unsigned kDefaultInvarianceTrials = 500;

std::string blocks_string( const std::vector<VarMask>& blocks )
{
  std::string s;
  for ( auto b : blocks )
  {
    s += ( s.empty() ? "" : " " ) + mask_to_string( b );
  }
  return s.empty() ? "{}" : s;
}

/// Runs check(i) for every index in parallel; returns the first failing index, if any.
template<typename Check>
std::optional<std::size_t> first_failure( std::size_t count, Check&& check )
{
  std::vector<std::uint8_t> ok( count, 1 );
  const auto total = static_cast<std::int64_t>( count );
#pragma omp parallel for schedule( dynamic, 8 )
  for ( std::int64_t i = 0; i < total; ++i )
  {
    ok[i] = check( static_cast<std::size_t>( i ) ) ? 1 : 0;
  }
  auto it = std::find( ok.begin(), ok.end(), 0 );
  if ( it == ok.end() )
  {
    return std::nullopt;
  }
  return static_cast<std::size_t>( it - ok.begin() );
}

std::vector<NcfLayerSpec> ncf_population( unsigned n, unsigned exhaustive_max, unsigned sample, std::mt19937_64& rng,
                                          const Limits& limits, std::string& mode )
{
  std::vector<NcfLayerSpec> specs;
  if ( n <= exhaustive_max )
  {
    mode = "exhaustive";
    Limits enum_limits = limits;
    enum_limits.ncf_enum_cap = std::max( limits.ncf_enum_cap, exhaustive_max );
    NcfStream stream( n, enum_limits );
    while ( auto spec = stream.next() )
    {
      specs.push_back( std::move( *spec ) );
    }
  }
  else
  {
    mode = "sampled";
    for ( unsigned k = 0; k < sample; ++k )
    {
      specs.push_back( random_ncf( n, rng ) );
    }
  }
  return specs;
}

VerifyOutcome formula_suite( unsigned n, const VerifyOptions& options, std::mt19937_64& rng )
{
  VerifyOutcome out{"formula", n, "", 0, true, "", std::nullopt};
  if ( n > options.limits.sensitivity_cap )
  {
    throw CapExceeded( "verify formula", n, options.limits.sensitivity_cap );
  }
  const auto sample = options.sample ? options.sample : kDefaultFormulaSample;
  const auto specs = ncf_population( n, kFormulaExhaustiveMax, sample, rng, options.limits, out.mode );
  out.checked = specs.size();

  auto bad = first_failure( specs.size(), [&]( std::size_t i ) {
    const auto f = construct( specs[i] );
    return sensitivity( f, options.limits ).value == sensitivity_formula( profile_of( specs[i] ) );
  } );
  if ( bad )
  {
    const auto& spec = specs[*bad];
    const auto f = construct( spec );
    const auto s = sensitivity( f, options.limits );
    out.passed = false;
    out.counterexample = "table=" + to_table_string( f ) + " spec=" + to_string( spec ) + " word=" +
                         to_string( s.witness ) + " oracle=" + std::to_string( s.value ) +
                         " formula=" + std::to_string( sensitivity_formula( profile_of( spec ) ) );
  }
  out.detail = "s(f) equals the closed form over " + std::to_string( out.checked ) + " NCFs";
  return out;
}

VerifyOutcome bs_suite( unsigned n, const VerifyOptions& options, std::mt19937_64& rng )
{
  VerifyOutcome out{"bs_eq_s", n, "", 0, true, "", std::nullopt};
  if ( n > options.limits.block_cap )
  {
    throw CapExceeded( "verify bs_eq_s", n, options.limits.block_cap );
  }
  const auto sample = options.sample ? options.sample : kDefaultBlockSample;
  const auto specs = ncf_population( n, kBlockExhaustiveMax, sample, rng, options.limits, out.mode );
  out.checked = specs.size();

  auto holds = [&]( const SensitivityReport& r, unsigned formula ) {
    return r.s == formula && r.bs == r.s &&
           std::all_of( r.bs_l.begin(), r.bs_l.end(), [&]( unsigned v ) { return v == r.s; } );
  };
  auto bad = first_failure( specs.size(), [&]( std::size_t i ) {
    return holds( analyze_sensitivity( construct( specs[i] ), options.limits ),
                  sensitivity_formula( profile_of( specs[i] ) ) );
  } );
  if ( bad )
  {
    const auto& spec = specs[*bad];
    const auto f = construct( spec );
    const auto r = analyze_sensitivity( f, options.limits );
    out.passed = false;
    out.counterexample = "table=" + to_table_string( f ) + " spec=" + to_string( spec ) + " word=" +
                         to_string( r.bs_witness ) + " blocks=" + blocks_string( r.bs_blocks ) +
                         " s=" + std::to_string( r.s ) + " bs=" + std::to_string( r.bs );
  }
  out.detail = "bs = bs_l = s for every l over " + std::to_string( out.checked ) + " NCFs";
  return out;
}

VerifyOutcome mncf_suite( unsigned n, const VerifyOptions& options )
{
  VerifyOutcome out{"mncf", n, "", 0, true, "", std::nullopt};
  const auto count = count_mncf( n, options.limits ).mncf_count;

  std::vector<NcfLayerSpec> specs;
  MncfStream stream( n, options.limits );
  std::uint64_t streamed = 0;
  const bool keep = n <= kMncfSpotCheckMax;
  while ( auto m = stream.next() )
  {
    ++streamed;
    if ( keep )
    {
      specs.push_back( m->to_ncf() );
    }
  }
  out.checked = streamed;
  std::ostringstream detail;
  detail << "count formula " << count << ", stream length " << streamed;
  if ( BigInt( streamed ) != count )
  {
    out.passed = false;
    out.counterexample = "count formula " + count.str() + " != stream length " + std::to_string( streamed );
  }

  if ( keep && out.passed )
  {
    auto bad = first_failure( specs.size(), [&]( std::size_t i ) {
      const auto f = construct( specs[i] );
      const auto r = recognize( f );
      return is_monotone( f ) == mncf_direction( specs[i] ) && is_ncf( r ) && std::get<NcfLayerSpec>( r ) == specs[i];
    } );
    if ( bad )
    {
      out.passed = false;
      out.counterexample = "table=" + to_table_string( construct( specs[*bad] ) ) + " spec=" + to_string( specs[*bad] ) +
                           " is not a monotone NCF in the expected direction";
    }
    std::unordered_set<TruthTable> distinct;
    for ( const auto& spec : specs )
    {
      distinct.insert( construct( spec ) );
    }
    if ( out.passed && distinct.size() != specs.size() )
    {
      out.passed = false;
      out.counterexample = "stream yields " + std::to_string( specs.size() ) + " specs but only " +
                           std::to_string( distinct.size() ) + " distinct tables";
    }
  }

  if ( n <= kMncfBruteForceMax && out.passed )
  {
    out.mode = "exhaustive";
    std::set<TruthTable> from_stream;
    for ( const auto& spec : specs )
    {
      from_stream.insert( construct( spec ) );
    }
    std::set<TruthTable> filtered;
    const std::uint64_t tables = std::uint64_t( 1 ) << ( std::uint64_t( 1 ) << n );
    for ( std::uint64_t bits = 0; bits < tables; ++bits )
    {
      auto f = TruthTable::tabulate( n, [bits]( std::uint32_t j ) { return ( bits >> j ) & 1u; } );
      const auto m = is_monotone( f );
      if ( ( m == Monotonicity::increasing || m == Monotonicity::decreasing ) && is_ncf( recognize( f ) ) )
      {
        filtered.insert( std::move( f ) );
      }
    }
    detail << ", brute-force filter " << filtered.size();
    if ( filtered != from_stream )
    {
      out.passed = false;
      for ( const auto& f : filtered )
      {
        if ( !from_stream.count( f ) )
        {
          out.counterexample = "table=" + to_table_string( f ) + " is monotone and NCF but not enumerated";
          break;
        }
      }
      if ( !out.counterexample )
      {
        for ( const auto& f : from_stream )
        {
          if ( !filtered.count( f ) )
          {
            out.counterexample = "table=" + to_table_string( f ) + " is enumerated but fails the filter";
            break;
          }
        }
      }
    }
  }
  else if ( out.mode.empty() )
  {
    out.mode = keep ? "stream" : "count";
  }
  out.detail = detail.str();
  return out;
}

VerifyOutcome bounds_suite( unsigned n )
{
  VerifyOutcome out{"bounds", n, "exhaustive", 0, true, "", std::nullopt};
  CompositionStream compositions( n );
  while ( auto p = compositions.next() )
  {
    ++out.checked;
    const auto s = sensitivity_formula( *p );
    const auto r = p->layer_number();
    bool ok = 2 * s >= n + 1;
    if ( r == 1 )
    {
      ok = ok && s == n;
    }
    else if ( r == n - 1 )
    {
      ok = ok && s == ( n % 2 == 0 ? ( n + 2 ) / 2 : ( n + 1 ) / 2 );
    }
    else
    {
      ok = ok && s <= ( r % 2 == 1 ? n + 1 - ( r + 1 ) / 2 : n + 1 - r / 2 );
    }
    const auto bounds = sensitivity_bounds( *p );
    ok = ok && bounds.lower <= s && s <= bounds.upper;
    if ( !ok && !out.counterexample )
    {
      out.passed = false;
      out.counterexample = "profile=[" + to_string( *p ) + "] formula=" + std::to_string( s );
    }
  }
  out.detail = "bounds hold for all " + std::to_string( out.checked ) + " profiles";
  return out;
}

VerifyOutcome invariance_suite( const VerifyOptions& options, std::mt19937_64& rng )
{
  const unsigned lo = std::max( options.min_n, 1u );
  const unsigned hi = std::min( options.max_n, std::min( options.limits.block_cap, options.limits.sensitivity_cap ) );
  VerifyOutcome out{"invariance", hi, "sampled", 0, true, "", std::nullopt};
  if ( lo > hi )
  {
    throw CapExceeded( "verify invariance", lo, hi );
  }
  const auto trials = options.sample ? options.sample : kDefaultInvarianceTrials;

  struct Trial
  {
    TruthTable f;
    std::vector<VarIndex> sigma;
    InputWord shift;
  };
  std::vector<Trial> population;
  std::uniform_int_distribution<unsigned> pick_n( lo, hi );
  for ( unsigned t = 0; t < trials; ++t )
  {
    const auto n = pick_n( rng );
    std::vector<bool> bits( std::size_t( 1 ) << n );
    for ( std::size_t j = 0; j < bits.size(); ++j )
    {
      bits[j] = rng() & 1u;
    }
    std::vector<VarIndex> sigma( n );
    std::iota( sigma.begin(), sigma.end(), 0u );
    std::shuffle( sigma.begin(), sigma.end(), rng );
    const auto shift = static_cast<std::uint32_t>( rng() & ( ( std::uint64_t( 1 ) << n ) - 1 ) );
    population.push_back( {TruthTable::from_bits( n, bits ), std::move( sigma ), InputWord( n, shift )} );
  }
  out.checked = population.size();

  auto same = []( const SensitivityReport& a, const SensitivityReport& b ) {
    return a.s == b.s && a.bs == b.bs && a.bs_l == b.bs_l;
  };
  auto bad = first_failure( population.size(), [&]( std::size_t i ) {
    const auto& t = population[i];
    const auto base = analyze_sensitivity( t.f, options.limits );
    return same( base, analyze_sensitivity( complement( t.f ), options.limits ) ) &&
           same( base, analyze_sensitivity( permute( t.f, t.sigma ), options.limits ) ) &&
           same( base, analyze_sensitivity( xor_shift( t.f, t.shift ), options.limits ) );
  } );
  if ( bad )
  {
    const auto& t = population[*bad];
    out.passed = false;
    out.counterexample = "table=" + to_table_string( t.f ) + " shift=" + to_string( t.shift );
  }
  out.detail = "s, bs, bs_l invariant under complement, permutation and input shift over " +
               std::to_string( out.checked ) + " random functions with n in [" + std::to_string( lo ) + "," +
               std::to_string( hi ) + "]";
  return out;
}

} // namespace

bool VerifySummary::passed() const
{
  return std::all_of( outcomes.begin(), outcomes.end(), []( const auto& o ) { return o.passed; } );
}

Suite parse_suite( std::string_view name )
{
  if ( name == "formula" )
    return Suite::formula;
  if ( name == "bs_eq_s" )
    return Suite::bs_eq_s;
  if ( name == "mncf" )
    return Suite::mncf;
  if ( name == "bounds" )
    return Suite::bounds;
  if ( name == "invariance" )
    return Suite::invariance;
  if ( name == "all" )
    return Suite::all;
  throw ParseError( 0, std::string( name ), "unknown suite (formula, bs_eq_s, mncf, bounds, invariance, all)" );
}

const char* to_string( Suite suite )
{
  switch ( suite )
  {
  case Suite::formula:
    return "formula";
  case Suite::bs_eq_s:
    return "bs_eq_s";
  case Suite::mncf:
    return "mncf";
  case Suite::bounds:
    return "bounds";
  case Suite::invariance:
    return "invariance";
  case Suite::all:
    return "all";
  }
  return "all";
}

VerifySummary verify( Suite suite, const VerifyOptions& options )
{
  if ( options.min_n < 2 || options.min_n > options.max_n )
  {
    throw InvalidArgument( "verify needs 2 <= min-n <= max-n" );
  }
  VerifySummary summary;
  // one generator per suite keeps each suite's population independent of which others run
  auto run = [&]( Suite which ) {
    std::mt19937_64 rng( options.seed + static_cast<std::uint64_t>( which ) );
    switch ( which )
    {
    case Suite::formula:
      for ( unsigned n = options.min_n; n <= options.max_n; ++n )
        summary.outcomes.push_back( formula_suite( n, options, rng ) );
      break;
    case Suite::bs_eq_s:
      for ( unsigned n = options.min_n; n <= std::min( options.max_n, options.limits.block_cap ); ++n )
        summary.outcomes.push_back( bs_suite( n, options, rng ) );
      if ( suite != Suite::all && options.max_n > options.limits.block_cap )
        throw CapExceeded( "verify bs_eq_s", options.max_n, options.limits.block_cap );
      break;
    case Suite::mncf:
      for ( unsigned n = options.min_n; n <= options.max_n; ++n )
        summary.outcomes.push_back( mncf_suite( n, options ) );
      break;
    case Suite::bounds:
      for ( unsigned n = options.min_n; n <= options.max_n; ++n )
        summary.outcomes.push_back( bounds_suite( n ) );
      break;
    case Suite::invariance:
      summary.outcomes.push_back( invariance_suite( options, rng ) );
      break;
    case Suite::all:
      break;
    }
  };
  if ( suite == Suite::all )
  {
    for ( auto s : {Suite::formula, Suite::bs_eq_s, Suite::mncf, Suite::bounds, Suite::invariance} )
    {
      run( s );
    }
  }
  else
  {
    run( suite );
  }
  return summary;
}

Json to_json( const VerifySummary& summary )
{
  Json j;
  j["passed"] = summary.passed();
  Json list = Json::array();
  for ( const auto& o : summary.outcomes )
  {
    Json item{{"suite", o.suite}, {"n", o.n}, {"mode", o.mode}, {"checked", o.checked}, {"passed", o.passed},
              {"detail", o.detail}};
    if ( o.counterexample )
    {
      item["counterexample"] = *o.counterexample;
    }
    list.push_back( std::move( item ) );
  }
  j["outcomes"] = std::move( list );
  return j;
}

std::string render_text( const VerifySummary& summary )
{
  std::ostringstream out;
  for ( const auto& o : summary.outcomes )
  {
    out << ( o.passed ? "PASS " : "FAIL " ) << o.suite << " n=" << o.n << " (" << o.mode << ", " << o.checked
        << " checked): " << o.detail << "\n";
    if ( o.counterexample )
    {
      out << "     counterexample: " << *o.counterexample << "\n";
    }
  }
  out << ( summary.passed() ? "all checks passed" : "verification FAILED" ) << "\n";
  return out.str();
}

} // namespace ncfkit
