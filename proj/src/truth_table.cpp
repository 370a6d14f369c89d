#include "ncfkit/truth_table.hpp"

#include <algorithm>
#include <string>

namespace ncfkit
{

namespace
{

void check_num_vars( unsigned n )
{
  if ( n < 1 || n > kHardMaxVars )
  {
    throw InvalidArgument( "variable count must be in 1.." + std::to_string( kHardMaxVars ) + ", got " +
                           std::to_string( n ) );
  }
}

std::uint32_t mask_for( unsigned n )
{
  return n >= 32 ? ~std::uint32_t( 0 ) : ( std::uint32_t( 1 ) << n ) - 1u;
}

} // namespace

InputWord::InputWord( unsigned n, std::uint32_t index ) : n_( n ), index_( index )
{
  if ( n > kHardMaxVars )
  {
    throw InvalidArgument( "input word too long" );
  }
  if ( ( index & ~mask_for( n ) ) != 0 )
  {
    throw InvalidArgument( "word index " + std::to_string( index ) + " out of range for n=" + std::to_string( n ) );
  }
}

InputWord::InputWord( std::initializer_list<int> bits )
{
  std::vector<bool> v;
  for ( auto b : bits )
  {
    v.push_back( b != 0 );
  }
  *this = from_bits( v );
}

InputWord InputWord::from_bits( const std::vector<bool>& bits )
{
  if ( bits.size() > kHardMaxVars )
  {
    throw InvalidArgument( "input word too long" );
  }
  std::uint32_t index = 0;
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    if ( bits[i] )
    {
      index |= std::uint32_t( 1 ) << i;
    }
  }
  return InputWord( static_cast<unsigned>( bits.size() ), index );
}

InputWord flip( const InputWord& x, VarMask block )
{
  if ( ( block & ~mask_for( x.num_vars() ) ) != 0 )
  {
    throw InvalidArgument( "flip: index out of range for n=" + std::to_string( x.num_vars() ) );
  }
  return InputWord( x.num_vars(), x.index() ^ block );
}

TruthTable::TruthTable( unsigned n ) : n_( n )
{
  check_num_vars( n );
  blocks_.assign( n >= 6 ? ( std::size_t( 1 ) << ( n - 6 ) ) : 1u, 0u );
}

TruthTable TruthTable::constant( unsigned n, bool value )
{
  return tabulate( n, [value]( std::uint32_t ) { return value; } );
}

TruthTable TruthTable::projection( unsigned n, VarIndex var )
{
  if ( var >= n )
  {
    throw InvalidArgument( "projection: variable out of range" );
  }
  return tabulate( n, [var]( std::uint32_t j ) { return ( j >> var ) & 1u; } );
}

TruthTable TruthTable::from_bits( unsigned n, const std::vector<bool>& values )
{
  check_num_vars( n );
  if ( values.size() != ( std::size_t( 1 ) << n ) )
  {
    throw DimensionError( "expected " + std::to_string( std::size_t( 1 ) << n ) + " values, got " +
                          std::to_string( values.size() ) );
  }
  return tabulate( n, [&values]( std::uint32_t j ) { return values[j]; } );
}

std::uint64_t TruthTable::count_ones() const noexcept
{
  std::uint64_t total = 0;
  for ( auto b : blocks_ )
  {
    total += static_cast<std::uint64_t>( std::popcount( b ) );
  }
  return total;
}

bool TruthTable::is_constant() const noexcept
{
  const auto ones = count_ones();
  return ones == 0 || ones == num_bits();
}

bool TruthTable::operator<( const TruthTable& other ) const
{
  if ( n_ != other.n_ )
  {
    return n_ < other.n_;
  }
  return blocks_ < other.blocks_;
}

bool eval( const TruthTable& f, const InputWord& x )
{
  if ( x.num_vars() != f.num_vars() )
  {
    throw DimensionError( "eval: word has " + std::to_string( x.num_vars() ) + " bits, function has " +
                          std::to_string( f.num_vars() ) + " variables" );
  }
  return f.get( x.index() );
}

Restriction restrict( const TruthTable& f, const std::vector<Assignment>& assignments )
{
  const auto n = f.num_vars();
  VarMask fixed_mask = 0;
  std::uint32_t fixed_values = 0;
  for ( const auto& a : assignments )
  {
    if ( a.var >= n )
    {
      throw InvalidArgument( "restrict: variable index " + std::to_string( a.var ) + " out of range" );
    }
    const VarMask bit = VarMask( 1 ) << a.var;
    if ( fixed_mask & bit )
    {
      throw InvalidArgument( "restrict: duplicate variable index " + std::to_string( a.var ) );
    }
    fixed_mask |= bit;
    if ( a.value )
    {
      fixed_values |= bit;
    }
  }
  if ( assignments.size() >= n )
  {
    throw InvalidArgument( "restrict: all variables assigned, use eval" );
  }

  std::vector<VarIndex> survivors;
  for ( VarIndex i = 0; i < n; ++i )
  {
    if ( !( fixed_mask & ( VarMask( 1 ) << i ) ) )
    {
      survivors.push_back( i );
    }
  }

  const auto m = static_cast<unsigned>( survivors.size() );
  auto table = TruthTable::tabulate( m, [&]( std::uint32_t j ) {
    std::uint32_t full = fixed_values;
    for ( unsigned k = 0; k < m; ++k )
    {
      if ( ( j >> k ) & 1u )
      {
        full |= std::uint32_t( 1 ) << survivors[k];
      }
    }
    return f.get( full );
  } );
  return {std::move( table ), std::move( survivors )};
}

TruthTable permute( const TruthTable& f, const std::vector<VarIndex>& sigma )
{
  const auto n = f.num_vars();
  if ( sigma.size() != n )
  {
    throw InvalidArgument( "permute: permutation has wrong length" );
  }
  VarMask seen = 0;
  for ( auto s : sigma )
  {
    if ( s >= n || ( seen & ( VarMask( 1 ) << s ) ) )
    {
      throw InvalidArgument( "permute: not a permutation" );
    }
    seen |= VarMask( 1 ) << s;
  }

  return TruthTable::tabulate( n, [&]( std::uint32_t j ) {
    std::uint32_t arg = 0;
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( ( j >> sigma[i] ) & 1u )
      {
        arg |= std::uint32_t( 1 ) << i;
      }
    }
    return f.get( arg );
  } );
}

TruthTable xor_shift( const TruthTable& f, const InputWord& a )
{
  if ( a.num_vars() != f.num_vars() )
  {
    throw DimensionError( "xor_shift: shift word length differs from variable count" );
  }
  const auto shift = a.index();
  return TruthTable::tabulate( f.num_vars(), [&]( std::uint32_t j ) { return f.get( j ^ shift ); } );
}

TruthTable complement( const TruthTable& f )
{
  TruthTable g = f;
  for ( auto& b : g.blocks_ )
  {
    b = ~b;
  }
  if ( g.n_ < 6 )
  {
    g.blocks_[0] &= ( std::uint64_t( 1 ) << g.num_bits() ) - 1u;
  }
  return g;
}

const char* to_string( Monotonicity m )
{
  switch ( m )
  {
  case Monotonicity::increasing:
    return "increasing";
  case Monotonicity::decreasing:
    return "decreasing";
  case Monotonicity::both:
    return "both";
  case Monotonicity::neither:
    return "neither";
  }
  return "neither";
}

Monotonicity is_monotone( const TruthTable& f )
{
  bool increasing = true;
  bool decreasing = true;
  const auto n = f.num_vars();
  for ( std::uint64_t j = 0; j < f.num_bits() && ( increasing || decreasing ); ++j )
  {
    const auto lo = static_cast<std::uint32_t>( j );
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( ( lo >> i ) & 1u )
      {
        continue;
      }
      // covering pair lo < hi differing in bit i
      const bool a = f.get( lo );
      const bool b = f.get( lo | ( std::uint32_t( 1 ) << i ) );
      if ( a && !b )
      {
        increasing = false;
      }
      if ( !a && b )
      {
        decreasing = false;
      }
    }
  }
  if ( increasing && decreasing )
  {
    return Monotonicity::both;
  }
  if ( increasing )
  {
    return Monotonicity::increasing;
  }
  return decreasing ? Monotonicity::decreasing : Monotonicity::neither;
}

VarMask essential_variables( const TruthTable& f )
{
  VarMask result = 0;
  const auto n = f.num_vars();
  for ( unsigned i = 0; i < n; ++i )
  {
    const std::uint32_t bit = std::uint32_t( 1 ) << i;
    for ( std::uint64_t j = 0; j < f.num_bits(); ++j )
    {
      const auto w = static_cast<std::uint32_t>( j );
      if ( !( w & bit ) && f.get( w ) != f.get( w | bit ) )
      {
        result |= bit;
        break;
      }
    }
  }
  return result;
}

} // namespace ncfkit

std::size_t std::hash<ncfkit::TruthTable>::operator()( const ncfkit::TruthTable& t ) const noexcept
{
  std::size_t h = std::hash<unsigned>{}( t.num_vars() );
  for ( auto b : t.raw_blocks() )
  {
    h ^= std::hash<std::uint64_t>{}( b ) + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
  }
  return h;
}
