#include "ncfkit/ncf.hpp"

#include <algorithm>
#include <numeric>

namespace ncfkit
{

NcfLayerSpec::NcfLayerSpec( unsigned n, std::vector<Layer> layers, bool b ) : n_( n ), layers_( std::move( layers ) ), b_( b )
{
  if ( n < 2 || n > kHardMaxVars )
  {
    throw InvalidArgument( "NCF spec needs 2 <= n <= " + std::to_string( kHardMaxVars ) + ", got n=" +
                           std::to_string( n ) );
  }
  if ( layers_.empty() )
  {
    throw InvalidArgument( "NCF spec has no layers" );
  }
  VarMask seen = 0;
  for ( std::size_t i = 0; i < layers_.size(); ++i )
  {
    auto& layer = layers_[i];
    if ( layer.empty() )
    {
      throw InvalidArgument( "layer " + std::to_string( i + 1 ) + " is empty" );
    }
    std::sort( layer.begin(), layer.end() );
    for ( const auto& lit : layer )
    {
      if ( lit.var >= n )
      {
        throw InvalidArgument( "variable x" + std::to_string( lit.var + 1 ) + " out of range for n=" +
                               std::to_string( n ) );
      }
      const VarMask bit = VarMask( 1 ) << lit.var;
      if ( seen & bit )
      {
        throw InvalidArgument( "variable x" + std::to_string( lit.var + 1 ) + " appears more than once" );
      }
      seen |= bit;
    }
  }
  if ( popcount( seen ) != n )
  {
    throw InvalidArgument( "layers do not cover all " + std::to_string( n ) + " variables" );
  }
  if ( layers_.back().size() < 2 )
  {
    throw InvalidArgument( "last layer must contain at least two variables" );
  }
}

unsigned Profile::num_vars() const
{
  return std::accumulate( ks.begin(), ks.end(), 0u );
}

void validate_profile( const Profile& p )
{
  if ( p.ks.empty() )
  {
    throw InvalidArgument( "empty profile" );
  }
  for ( auto k : p.ks )
  {
    if ( k < 1 )
    {
      throw InvalidArgument( "profile entries must be positive" );
    }
  }
  if ( p.ks.back() < 2 )
  {
    throw InvalidArgument( "last profile entry must be at least 2" );
  }
  if ( p.num_vars() > kHardMaxVars )
  {
    throw InvalidArgument( "profile describes too many variables" );
  }
}

const char* to_string( NotNcfStage stage )
{
  switch ( stage )
  {
  case NotNcfStage::single_variable:
    return "single_variable";
  case NotNcfStage::constant:
    return "constant";
  case NotNcfStage::inessential_variable:
    return "inessential_variable";
  case NotNcfStage::no_canalyzing_variable:
    return "no_canalyzing_variable";
  case NotNcfStage::inconsistent_canalyzed_values:
    return "inconsistent_canalyzed_values";
  case NotNcfStage::alternation_violated:
    return "alternation_violated";
  }
  return "unknown";
}

std::string NotNcf::describe() const
{
  switch ( stage )
  {
  case NotNcfStage::single_variable:
    return "single-variable function (outside NCF scope, which needs n >= 2)";
  case NotNcfStage::constant:
    return "constant function";
  case NotNcfStage::inessential_variable:
    return "function does not depend on every variable";
  case NotNcfStage::no_canalyzing_variable:
    return "no canalyzing variable at layer " + std::to_string( layer );
  case NotNcfStage::inconsistent_canalyzed_values:
    return "canalyzing variables disagree on the canalyzed value at layer " + std::to_string( layer );
  case NotNcfStage::alternation_violated:
    return "canalyzed value does not alternate at layer " + std::to_string( layer );
  }
  return "unknown";
}

TruthTable construct( const NcfLayerSpec& spec )
{
  struct LayerMasks
  {
    std::uint32_t mask;
    std::uint32_t active; // word bits under which M_i = 1
  };
  std::vector<LayerMasks> masks;
  for ( const auto& layer : spec.layers() )
  {
    LayerMasks lm{0, 0};
    for ( const auto& lit : layer )
    {
      const std::uint32_t bit = std::uint32_t( 1 ) << lit.var;
      lm.mask |= bit;
      if ( !lit.input )
      {
        lm.active |= bit;
      }
    }
    masks.push_back( lm );
  }
  const bool b = spec.output_constant();

  return TruthTable::tabulate( spec.num_vars(), [&]( std::uint32_t w ) {
    auto term = [&]( const LayerMasks& lm ) { return ( w & lm.mask ) == lm.active; };
    bool v = term( masks.back() );
    for ( auto i = masks.size() - 1; i-- > 0; )
    {
      v = term( masks[i] ) && !v;
    }
    return v != b;
  } );
}

namespace
{

/// Returns 0 or 1 if fixing var to `value` makes g constant, -1 otherwise.
int forced_value( const TruthTable& g, VarIndex var, bool value )
{
  const std::uint32_t bit = std::uint32_t( 1 ) << var;
  int seen = -1;
  for ( std::uint64_t j = 0; j < g.num_bits(); ++j )
  {
    const auto w = static_cast<std::uint32_t>( j );
    if ( ( ( w & bit ) != 0 ) != value )
    {
      continue;
    }
    const int v = g.get( w );
    if ( seen < 0 )
    {
      seen = v;
    }
    else if ( seen != v )
    {
      return -1;
    }
  }
  return seen;
}

} // namespace

Recognition recognize( const TruthTable& f )
{
  const auto n = f.num_vars();
  const VarMask all = ( VarMask( 1 ) << n ) - 1u;
  if ( n < 2 )
  {
    return NotNcf{NotNcfStage::single_variable, 0, all};
  }
  if ( f.is_constant() )
  {
    return NotNcf{NotNcfStage::constant, 0, all};
  }
  if ( essential_variables( f ) != all )
  {
    return NotNcf{NotNcfStage::inessential_variable, 0, all};
  }

  TruthTable current = f;
  std::vector<VarIndex> original( n );
  std::iota( original.begin(), original.end(), 0u );
  std::vector<Layer> layers;
  bool b = false;

  while ( true )
  {
    const auto layer_index = static_cast<unsigned>( layers.size() + 1 );
    const auto m = current.num_vars();
    const VarMask remaining = indices_to_mask( original );

    Layer layer;
    std::vector<Assignment> fix;
    int canalyzed = -1;
    bool consistent = true;
    for ( VarIndex i = 0; i < m; ++i )
    {
      for ( bool a : {false, true} )
      {
        const int v = forced_value( current, i, a );
        if ( v < 0 )
        {
          continue;
        }
        if ( canalyzed >= 0 && v != canalyzed )
        {
          consistent = false;
        }
        canalyzed = v;
        layer.push_back( {original[i], a} );
        fix.push_back( {i, !a} );
      }
    }
    if ( layer.empty() )
    {
      return NotNcf{NotNcfStage::no_canalyzing_variable, layer_index, remaining};
    }
    if ( !consistent )
    {
      return NotNcf{NotNcfStage::inconsistent_canalyzed_values, layer_index, remaining};
    }
    if ( layer_index == 1 )
    {
      b = canalyzed != 0;
    }
    else if ( ( canalyzed != 0 ) != ( b != ( layer_index % 2 == 0 ) ) )
    {
      return NotNcf{NotNcfStage::alternation_violated, layer_index, remaining};
    }
    layers.push_back( layer );

    if ( layer.size() == m )
    {
      break;
    }
    auto next = restrict( current, fix );
    std::vector<VarIndex> next_original;
    for ( auto k : next.original_index )
    {
      next_original.push_back( original[k] );
    }
    current = std::move( next.table );
    original = std::move( next_original );
  }

  return NcfLayerSpec( n, std::move( layers ), b );
}

Profile profile_of( const NcfLayerSpec& spec )
{
  Profile p;
  for ( const auto& layer : spec.layers() )
  {
    p.ks.push_back( static_cast<unsigned>( layer.size() ) );
  }
  return p;
}

unsigned layer_number( const NcfLayerSpec& spec )
{
  return static_cast<unsigned>( spec.layers().size() );
}

unsigned sensitivity_formula( const Profile& p )
{
  validate_profile( p );
  const auto r = p.layer_number();
  if ( r == 1 )
  {
    return p.ks[0];
  }
  unsigned odd_sum = 0;  // k_1 + k_3 + ...
  unsigned even_sum = 0; // k_2 + k_4 + ...
  for ( unsigned i = 0; i < r; ++i )
  {
    ( i % 2 == 0 ? odd_sum : even_sum ) += p.ks[i];
  }
  if ( r % 2 == 1 )
  {
    return std::max( odd_sum, even_sum + 1 );
  }
  return std::max( odd_sum + 1, even_sum );
}

SensitivityBounds sensitivity_bounds( const Profile& p )
{
  validate_profile( p );
  const auto n = p.num_vars();
  const auto r = p.layer_number();
  if ( r == 1 )
  {
    return {n, n};
  }
  if ( r == n - 1 )
  {
    const unsigned exact = n % 2 == 0 ? ( n + 2 ) / 2 : ( n + 1 ) / 2;
    return {exact, exact};
  }
  const unsigned lower = ( n + 2 ) / 2; // ceil((n + 1) / 2)
  const unsigned upper = r % 2 == 1 ? n + 1 - ( r + 1 ) / 2 : n + 1 - r / 2;
  return {lower, upper};
}

StandardForm standardize( const NcfLayerSpec& spec )
{
  const auto n = spec.num_vars();
  std::vector<VarIndex> sigma;
  std::uint32_t shift = 0;
  std::vector<Layer> standard_layers;
  for ( const auto& layer : spec.layers() )
  {
    Layer standard;
    for ( const auto& lit : layer )
    {
      standard.push_back( {static_cast<VarIndex>( sigma.size() ), false} );
      sigma.push_back( lit.var );
      if ( lit.input )
      {
        shift |= std::uint32_t( 1 ) << lit.var;
      }
    }
    standard_layers.push_back( std::move( standard ) );
  }
  NcfLayerSpec standard_spec( n, std::move( standard_layers ), false );
  auto table = construct( standard_spec );
  return {std::move( standard_spec ), std::move( table ), std::move( sigma ), InputWord( n, shift ),
          spec.output_constant()};
}

TruthTable from_standard( const StandardForm& form )
{
  auto g = xor_shift( permute( form.table, form.sigma ), form.shift );
  return form.output_flip ? complement( g ) : g;
}

NcfLayerSpec random_ncf( unsigned n, std::mt19937_64& rng )
{
  if ( n < 2 )
  {
    throw InvalidArgument( "random_ncf needs n >= 2" );
  }
  std::vector<VarIndex> order( n );
  std::iota( order.begin(), order.end(), 0u );
  std::shuffle( order.begin(), order.end(), rng );

  // Compositions of n with k_r >= 2 correspond to compositions of n - 1:
  // cut after any of the first n - 2 positions independently.
  std::bernoulli_distribution coin( 0.5 );
  std::vector<unsigned> ks{1};
  for ( unsigned pos = 1; pos < n - 1; ++pos )
  {
    if ( coin( rng ) )
    {
      ks.push_back( 1 );
    }
    else
    {
      ++ks.back();
    }
  }
  ++ks.back();

  std::vector<Layer> layers;
  std::size_t next = 0;
  for ( auto k : ks )
  {
    Layer layer;
    for ( unsigned j = 0; j < k; ++j )
    {
      layer.push_back( {order[next++], coin( rng )} );
    }
    layers.push_back( std::move( layer ) );
  }
  const bool b = coin( rng );
  return NcfLayerSpec( n, std::move( layers ), b );
}

std::vector<bool> canalyzed_values( const NcfLayerSpec& spec )
{
  std::vector<bool> values;
  for ( std::size_t i = 0; i < spec.layers().size(); ++i )
  {
    values.push_back( spec.output_constant() != ( i % 2 == 1 ) );
  }
  return values;
}

} // namespace ncfkit
