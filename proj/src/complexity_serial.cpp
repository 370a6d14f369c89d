#include "ncfkit/complexity.hpp"

#include <algorithm>

namespace ncfkit::serial
{

namespace
{

void best_packing( const std::vector<VarMask>& blocks, std::size_t next, VarMask used, std::vector<VarMask>& current,
                   std::vector<VarMask>& best )
{
  if ( current.size() > best.size() )
  {
    best = current;
  }
  for ( std::size_t k = next; k < blocks.size(); ++k )
  {
    if ( ( blocks[k] & used ) == 0 )
    {
      current.push_back( blocks[k] );
      best_packing( blocks, k + 1, used | blocks[k], current, best );
      current.pop_back();
    }
  }
}

} // namespace

SensitivityResult sensitivity( const TruthTable& f )
{
  const auto n = f.num_vars();
  SensitivityResult best{0, InputWord( n, 0 )};
  for ( std::uint64_t j = 0; j < f.num_bits(); ++j )
  {
    const InputWord x( n, static_cast<std::uint32_t>( j ) );
    unsigned s = 0;
    for ( unsigned i = 0; i < n; ++i )
    {
      s += eval( f, flip( x, VarMask( 1 ) << i ) ) != eval( f, x );
    }
    if ( s > best.value )
    {
      best = {s, x};
    }
  }
  return best;
}

std::vector<VarMask> minimal_sensitive_blocks( const TruthTable& f, const InputWord& x )
{
  const auto n = f.num_vars();
  const bool v = eval( f, x );
  auto sensitive = [&]( VarMask s ) { return eval( f, flip( x, s ) ) != v; };

  std::vector<VarMask> out;
  for ( VarMask s = 1; s < ( VarMask( 1 ) << n ); ++s )
  {
    if ( !sensitive( s ) )
    {
      continue;
    }
    bool minimal = true;
    // proper nonempty submasks of s
    for ( VarMask t = ( s - 1 ) & s; t != 0 && minimal; t = ( t - 1 ) & s )
    {
      if ( sensitive( t ) )
      {
        minimal = false;
      }
    }
    if ( minimal )
    {
      out.push_back( s );
    }
  }
  std::sort( out.begin(), out.end(), size_then_lex_less );
  return out;
}

BlockSensitivityResult l_block_sensitivity( const TruthTable& f, unsigned l )
{
  const auto n = f.num_vars();
  BlockSensitivityResult best{0, InputWord( n, 0 ), {}};
  for ( std::uint64_t j = 0; j < f.num_bits(); ++j )
  {
    const InputWord x( n, static_cast<std::uint32_t>( j ) );
    std::vector<VarMask> blocks;
    for ( auto b : serial::minimal_sensitive_blocks( f, x ) )
    {
      if ( popcount( b ) <= l )
      {
        blocks.push_back( b );
      }
    }
    std::vector<VarMask> current, packing;
    best_packing( blocks, 0, 0, current, packing );
    if ( packing.size() > best.value )
    {
      best = {static_cast<unsigned>( packing.size() ), x, packing};
    }
  }
  return best;
}

BlockSensitivityResult block_sensitivity( const TruthTable& f )
{
  return serial::l_block_sensitivity( f, f.num_vars() );
}

AverageSensitivity average_sensitivity( const TruthTable& f )
{
  std::uint64_t total = 0;
  for ( std::uint64_t j = 0; j < f.num_bits(); ++j )
  {
    const InputWord x( f.num_vars(), static_cast<std::uint32_t>( j ) );
    for ( unsigned i = 0; i < f.num_vars(); ++i )
    {
      total += eval( f, flip( x, VarMask( 1 ) << i ) ) != eval( f, x );
    }
  }
  return {total, f.num_bits()};
}

} // namespace ncfkit::serial
