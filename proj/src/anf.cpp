#include "ncfkit/truth_table.hpp"

#include <algorithm>
#include <string>

namespace ncfkit
{

namespace
{

bool monomial_order( VarMask a, VarMask b )
{
  if ( popcount( a ) != popcount( b ) )
  {
    return popcount( a ) > popcount( b );
  }
  return size_then_lex_less( a, b );
}

/// In-place binary Moebius transform; it is its own inverse over GF(2).
void moebius( std::vector<std::uint8_t>& values, unsigned n )
{
  const std::size_t size = std::size_t( 1 ) << n;
  for ( unsigned i = 0; i < n; ++i )
  {
    const std::size_t bit = std::size_t( 1 ) << i;
    for ( std::size_t j = 0; j < size; ++j )
    {
      if ( j & bit )
      {
        values[j] ^= values[j ^ bit];
      }
    }
  }
}

} // namespace

AnfPolynomial::AnfPolynomial( unsigned n ) : n_( n ) {}

AnfPolynomial::AnfPolynomial( unsigned n, std::vector<VarMask> monomials ) : n_( n )
{
  const VarMask allowed = n >= 32 ? ~VarMask( 0 ) : ( VarMask( 1 ) << n ) - 1u;
  std::sort( monomials.begin(), monomials.end() );
  // x + x = 0: equal monomials cancel in pairs
  for ( std::size_t i = 0; i < monomials.size(); )
  {
    std::size_t j = i;
    while ( j < monomials.size() && monomials[j] == monomials[i] )
    {
      ++j;
    }
    if ( monomials[i] & ~allowed )
    {
      throw InvalidArgument( "monomial uses a variable beyond x" + std::to_string( n ) );
    }
    if ( ( j - i ) % 2 == 1 )
    {
      monomials_.push_back( monomials[i] );
    }
    i = j;
  }
  std::sort( monomials_.begin(), monomials_.end(), monomial_order );
}

AnfPolynomial to_anf( const TruthTable& f )
{
  const auto n = f.num_vars();
  std::vector<std::uint8_t> values( f.num_bits() );
  for ( std::uint64_t j = 0; j < f.num_bits(); ++j )
  {
    values[j] = f.get( static_cast<std::uint32_t>( j ) );
  }
  moebius( values, n );
  std::vector<VarMask> monomials;
  for ( std::uint64_t j = 0; j < values.size(); ++j )
  {
    if ( values[j] )
    {
      monomials.push_back( static_cast<VarMask>( j ) );
    }
  }
  return AnfPolynomial( n, std::move( monomials ) );
}

TruthTable from_anf( const AnfPolynomial& p )
{
  const auto n = p.num_vars();
  std::vector<std::uint8_t> values( std::size_t( 1 ) << n, 0u );
  for ( auto m : p.monomials() )
  {
    values[m] = 1;
  }
  moebius( values, n );
  return TruthTable::tabulate( n, [&values]( std::uint32_t j ) { return values[j] != 0; } );
}

} // namespace ncfkit
