#pragma once

// Test-only oracles. None of these call into the code paths they check:
// block sensitivity is maximised over every sensitive subset by a subset DP,
// NCFs are evaluated by the case-by-case cascade instead of the product form,
// and counts come from a recurrence over ordered set partitions.

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncfkit/ncf.hpp"
#include "ncfkit/truth_table.hpp"

namespace oracle
{

using ncfkit::TruthTable;

/// bs_l(f;x) maximised over all families of disjoint sensitive subsets of size <= l (not just minimal ones).
inline unsigned direct_l_block_sensitivity_at( const TruthTable& f, std::uint32_t x, unsigned l )
{
  const unsigned n = f.num_vars();
  const std::uint32_t full = ( std::uint32_t( 1 ) << n ) - 1u;
  const bool v = f.get( x );
  // best[m]: largest number of disjoint sensitive subsets inside m
  std::vector<unsigned> best( std::size_t( 1 ) << n, 0 );
  for ( std::uint32_t m = 1; m <= full; ++m )
  {
    const std::uint32_t low = m & ( ~m + 1 );
    unsigned value = best[m ^ low]; // leave the lowest element unused
    // or spend it inside some sensitive subset s of m
    const std::uint32_t rest = m ^ low;
    for ( std::uint32_t t = rest;; t = ( t - 1 ) & rest )
    {
      const std::uint32_t s = t | low;
      if ( static_cast<unsigned>( __builtin_popcount( s ) ) <= l && f.get( x ^ s ) != v )
      {
        value = std::max( value, 1 + best[m ^ s] );
      }
      if ( t == 0 )
      {
        break;
      }
    }
    best[m] = value;
  }
  return best[full];
}

inline unsigned direct_block_sensitivity_at( const TruthTable& f, std::uint32_t x )
{
  return direct_l_block_sensitivity_at( f, x, f.num_vars() );
}

inline unsigned direct_l_block_sensitivity( const TruthTable& f, unsigned l )
{
  unsigned best = 0;
  for ( std::uint64_t x = 0; x < f.num_bits(); ++x )
  {
    best = std::max( best, direct_l_block_sensitivity_at( f, static_cast<std::uint32_t>( x ), l ) );
  }
  return best;
}

inline unsigned direct_block_sensitivity( const TruthTable& f )
{
  return direct_l_block_sensitivity( f, f.num_vars() );
}

/// Evaluates an NCF spec by its cascade: the first layer holding a variable at
/// its canalyzing input decides; layer i (1-based) yields b for odd i, b+1 for even i.
inline bool cascade_eval( const ncfkit::NcfLayerSpec& spec, std::uint32_t word )
{
  const bool b = spec.output_constant();
  const auto& layers = spec.layers();
  for ( std::size_t i = 0; i < layers.size(); ++i )
  {
    for ( const auto& lit : layers[i] )
    {
      if ( ( ( word >> lit.var ) & 1u ) == static_cast<unsigned>( lit.input ) )
      {
        return i % 2 == 0 ? b : !b;
      }
    }
  }
  // every variable at its non-canalyzing input: complement of the last canalyzed value
  const bool last = ( layers.size() - 1 ) % 2 == 0 ? b : !b;
  return !last;
}

inline TruthTable cascade_table( const ncfkit::NcfLayerSpec& spec )
{
  return TruthTable::tabulate( spec.num_vars(), [&]( std::uint32_t w ) { return cascade_eval( spec, w ); } );
}

/// Ordered set partitions of an m-set (Fubini numbers).
inline boost::multiprecision::cpp_int ordered_partitions( unsigned m )
{
  std::vector<boost::multiprecision::cpp_int> q( m + 1 );
  q[0] = 1;
  for ( unsigned k = 1; k <= m; ++k )
  {
    q[k] = 0;
    boost::multiprecision::cpp_int c = 1; // C(k, j)
    for ( unsigned j = 1; j <= k; ++j )
    {
      c = c * ( k - j + 1 ) / j;
      q[k] += c * q[k - j];
    }
  }
  return q[m];
}

/// Ordered set partitions of an n-set whose last block has at least two elements.
inline boost::multiprecision::cpp_int ordered_partitions_last_ge2( unsigned n )
{
  boost::multiprecision::cpp_int total = 0;
  boost::multiprecision::cpp_int c = 1; // C(n, k)
  for ( unsigned k = 1; k <= n; ++k )
  {
    c = c * ( n - k + 1 ) / k;
    if ( k >= 2 )
    {
      total += c * ordered_partitions( n - k );
    }
  }
  return total;
}

inline TruthTable table_from_bits( unsigned n, std::uint64_t bits )
{
  return TruthTable::tabulate( n, [bits]( std::uint32_t j ) { return ( bits >> j ) & 1u; } );
}

inline TruthTable random_table( unsigned n, std::mt19937_64& rng )
{
  return TruthTable::tabulate( n, [&rng]( std::uint32_t ) { return ( rng() & 1u ) != 0; } );
}

} // namespace oracle
