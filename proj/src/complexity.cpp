#include "ncfkit/complexity.hpp"

#include <algorithm>
#include <string>

#include <omp.h>

namespace ncfkit
{

namespace
{

// Below these table sizes thread start-up costs more than the sweep.
constexpr std::uint64_t kParallelWordsSensitivity = std::uint64_t( 1 ) << 12;
constexpr std::uint64_t kParallelWordsBlocks = std::uint64_t( 1 ) << 5;

void check_cap( const char* what, unsigned n, unsigned cap )
{
  if ( n > cap || n > kHardMaxVars )
  {
    throw CapExceeded( what, n, std::min( cap, kHardMaxVars ) );
  }
}

void check_dims( const TruthTable& f, const InputWord& x )
{
  if ( x.num_vars() != f.num_vars() )
  {
    throw DimensionError( "word has " + std::to_string( x.num_vars() ) + " bits, function has " +
                          std::to_string( f.num_vars() ) + " variables" );
  }
}

/// (value, word) candidate; larger value wins, ties go to the smaller word.
struct Candidate
{
  unsigned value = 0;
  std::uint32_t word = 0;
  bool valid = false;

  bool beats( const Candidate& other ) const
  {
    if ( !other.valid )
    {
      return valid;
    }
    if ( !valid )
    {
      return false;
    }
    return value > other.value || ( value == other.value && word < other.word );
  }
};

unsigned sensitivity_at_index( const TruthTable& f, std::uint32_t w )
{
  const bool v = f.get( w );
  unsigned count = 0;
  for ( unsigned i = 0; i < f.num_vars(); ++i )
  {
    count += f.get( w ^ ( std::uint32_t( 1 ) << i ) ) != v;
  }
  return count;
}

/// Scratch buffers for the per-word minimal block computation.
struct BlockScratch
{
  std::vector<std::uint8_t> sensitive;
  std::vector<std::uint8_t> contains;

  explicit BlockScratch( unsigned n ) : sensitive( std::size_t( 1 ) << n ), contains( std::size_t( 1 ) << n ) {}
};

void minimal_blocks_into( const TruthTable& f, std::uint32_t w, BlockScratch& scratch, std::vector<VarMask>& out )
{
  const auto n = f.num_vars();
  const std::size_t size = std::size_t( 1 ) << n;
  const bool v = f.get( w );
  auto& sens = scratch.sensitive;
  auto& contains = scratch.contains;

  for ( std::size_t s = 0; s < size; ++s )
  {
    sens[s] = f.get( w ^ static_cast<std::uint32_t>( s ) ) != v;
    contains[s] = sens[s];
  }
  // contains[S]: some subset of S (S included) is sensitive
  for ( unsigned i = 0; i < n; ++i )
  {
    const std::size_t bit = std::size_t( 1 ) << i;
    for ( std::size_t s = 0; s < size; ++s )
    {
      if ( s & bit )
      {
        contains[s] |= contains[s ^ bit];
      }
    }
  }

  out.clear();
  for ( std::size_t s = 1; s < size; ++s )
  {
    if ( !sens[s] )
    {
      continue;
    }
    bool minimal = true;
    for ( unsigned i = 0; i < n && minimal; ++i )
    {
      const std::size_t bit = std::size_t( 1 ) << i;
      if ( ( s & bit ) && contains[s ^ bit] )
      {
        minimal = false;
      }
    }
    if ( minimal )
    {
      out.push_back( static_cast<VarMask>( s ) );
    }
  }
  std::sort( out.begin(), out.end(), size_then_lex_less );
}

class Packer
{
public:
  explicit Packer( std::vector<VarMask> blocks ) : blocks_( std::move( blocks ) ) {}

  BlockPacking run()
  {
    // A singleton {i} can replace any chosen block containing i, so all
    // singletons belong to some optimum; take them up front.
    VarMask free = 0;
    std::vector<VarMask> rest;
    for ( auto b : blocks_ )
    {
      free |= b;
    }
    for ( auto b : blocks_ )
    {
      if ( popcount( b ) == 1 )
      {
        forced_.push_back( b );
        free &= ~b;
      }
    }
    for ( auto b : blocks_ )
    {
      if ( popcount( b ) > 1 && ( b & free ) == b )
      {
        rest.push_back( b );
      }
    }
    blocks_ = std::move( rest );

    best_.clear();
    current_.clear();
    search( free );

    BlockPacking result;
    result.blocks = forced_;
    result.blocks.insert( result.blocks.end(), best_.begin(), best_.end() );
    std::sort( result.blocks.begin(), result.blocks.end(), size_then_lex_less );
    result.value = static_cast<unsigned>( result.blocks.size() );
    return result;
  }

private:
  void search( VarMask free )
  {
    VarMask coverable = 0;
    unsigned min_size = kHardMaxVars + 1;
    for ( auto b : blocks_ )
    {
      if ( ( b & free ) == b )
      {
        coverable |= b;
        min_size = std::min( min_size, popcount( b ) );
      }
    }
    if ( coverable == 0 )
    {
      if ( current_.size() > best_.size() )
      {
        best_ = current_;
      }
      return;
    }
    const auto bound = current_.size() + popcount( coverable ) / min_size;
    if ( bound <= best_.size() )
    {
      return;
    }

    const VarMask lowest = coverable & ( ~coverable + 1 );
    for ( auto b : blocks_ )
    {
      if ( ( b & lowest ) && ( b & free ) == b )
      {
        current_.push_back( b );
        search( free & ~b );
        current_.pop_back();
      }
    }
    search( free & ~lowest );
  }

  std::vector<VarMask> blocks_;
  std::vector<VarMask> forced_;
  std::vector<VarMask> best_;
  std::vector<VarMask> current_;
};

struct WordOutcome
{
  Candidate candidate;
  std::vector<VarMask> blocks;
};

void merge_outcome( WordOutcome& into, const WordOutcome& from )
{
  if ( from.candidate.beats( into.candidate ) )
  {
    into = from;
  }
}

} // namespace

unsigned sensitivity_at( const TruthTable& f, const InputWord& x )
{
  check_dims( f, x );
  return sensitivity_at_index( f, x.index() );
}

SensitivityResult sensitivity( const TruthTable& f, const Limits& limits )
{
  const auto n = f.num_vars();
  check_cap( "sensitivity", n, limits.sensitivity_cap );
  const auto words = static_cast<std::int64_t>( f.num_bits() );

  Candidate best;
#pragma omp parallel if ( f.num_bits() >= kParallelWordsSensitivity )
  {
    Candidate local;
#pragma omp for schedule( static ) nowait
    for ( std::int64_t j = 0; j < words; ++j )
    {
      const Candidate c{sensitivity_at_index( f, static_cast<std::uint32_t>( j ) ), static_cast<std::uint32_t>( j ), true};
      if ( c.beats( local ) )
      {
        local = c;
      }
    }
#pragma omp critical( ncfkit_sensitivity_reduce )
    if ( local.beats( best ) )
    {
      best = local;
    }
  }
  return {best.value, InputWord( n, best.word )};
}

std::vector<VarMask> minimal_sensitive_blocks( const TruthTable& f, const InputWord& x, const Limits& limits )
{
  check_dims( f, x );
  check_cap( "minimal_sensitive_blocks", f.num_vars(), limits.block_cap );
  BlockScratch scratch( f.num_vars() );
  std::vector<VarMask> out;
  minimal_blocks_into( f, x.index(), scratch, out );
  return out;
}

BlockPacking max_disjoint_blocks( const std::vector<VarMask>& blocks, unsigned max_block_size )
{
  std::vector<VarMask> usable;
  for ( auto b : blocks )
  {
    if ( b != 0 && popcount( b ) <= max_block_size )
    {
      usable.push_back( b );
    }
  }
  std::sort( usable.begin(), usable.end(), size_then_lex_less );
  usable.erase( std::unique( usable.begin(), usable.end() ), usable.end() );
  return Packer( std::move( usable ) ).run();
}

BlockPacking block_sensitivity_at( const TruthTable& f, const InputWord& x, const Limits& limits )
{
  return max_disjoint_blocks( minimal_sensitive_blocks( f, x, limits ) );
}

BlockPacking l_block_sensitivity_at( const TruthTable& f, const InputWord& x, unsigned l, const Limits& limits )
{
  if ( l < 1 || l > f.num_vars() )
  {
    throw InvalidArgument( "l must be in 1.." + std::to_string( f.num_vars() ) );
  }
  return max_disjoint_blocks( minimal_sensitive_blocks( f, x, limits ), l );
}

BlockSensitivityResult l_block_sensitivity( const TruthTable& f, unsigned l, const Limits& limits )
{
  const auto n = f.num_vars();
  check_cap( "block_sensitivity", n, limits.block_cap );
  if ( l < 1 || l > n )
  {
    throw InvalidArgument( "l must be in 1.." + std::to_string( n ) );
  }
  const auto words = static_cast<std::int64_t>( f.num_bits() );

  WordOutcome best;
#pragma omp parallel if ( f.num_bits() >= kParallelWordsBlocks )
  {
    BlockScratch scratch( n );
    std::vector<VarMask> minimal;
    WordOutcome local;
#pragma omp for schedule( dynamic, 16 ) nowait
    for ( std::int64_t j = 0; j < words; ++j )
    {
      const auto w = static_cast<std::uint32_t>( j );
      minimal_blocks_into( f, w, scratch, minimal );
      auto packing = max_disjoint_blocks( minimal, l );
      WordOutcome o{{packing.value, w, true}, std::move( packing.blocks )};
      merge_outcome( local, o );
    }
#pragma omp critical( ncfkit_block_reduce )
    merge_outcome( best, local );
  }
  return {best.candidate.value, InputWord( n, best.candidate.word ), std::move( best.blocks )};
}

BlockSensitivityResult block_sensitivity( const TruthTable& f, const Limits& limits )
{
  return l_block_sensitivity( f, f.num_vars(), limits );
}

AverageSensitivity average_sensitivity( const TruthTable& f, const Limits& limits )
{
  check_cap( "average_sensitivity", f.num_vars(), limits.sensitivity_cap );
  const auto words = static_cast<std::int64_t>( f.num_bits() );
  std::uint64_t total = 0;
#pragma omp parallel for reduction( + : total ) if ( f.num_bits() >= kParallelWordsSensitivity )
  for ( std::int64_t j = 0; j < words; ++j )
  {
    total += sensitivity_at_index( f, static_cast<std::uint32_t>( j ) );
  }
  return {total, f.num_bits()};
}

SensitivityReport analyze_sensitivity( const TruthTable& f, const Limits& limits )
{
  const auto n = f.num_vars();
  check_cap( "sensitivity", n, limits.sensitivity_cap );
  check_cap( "block_sensitivity", n, limits.block_cap );
  const auto words = static_cast<std::int64_t>( f.num_bits() );

  // best[l - 1] tracks bs_l; best[n - 1] carries the bs witness blocks
  std::vector<WordOutcome> best( n );
#pragma omp parallel if ( f.num_bits() >= kParallelWordsBlocks )
  {
    BlockScratch scratch( n );
    std::vector<VarMask> minimal;
    std::vector<WordOutcome> local( n );
#pragma omp for schedule( dynamic, 16 ) nowait
    for ( std::int64_t j = 0; j < words; ++j )
    {
      const auto w = static_cast<std::uint32_t>( j );
      minimal_blocks_into( f, w, scratch, minimal );
      unsigned largest = 0;
      for ( auto b : minimal )
      {
        largest = std::max( largest, popcount( b ) );
      }
      BlockPacking packing;
      for ( unsigned l = 1; l <= n; ++l )
      {
        // beyond the largest minimal block the packing cannot change
        if ( l == 1 || l <= largest )
        {
          packing = max_disjoint_blocks( minimal, l );
        }
        WordOutcome o{{packing.value, w, true}, {}};
        if ( o.candidate.beats( local[l - 1].candidate ) )
        {
          if ( l == n )
          {
            o.blocks = packing.blocks;
          }
          local[l - 1] = std::move( o );
        }
      }
    }
#pragma omp critical( ncfkit_report_reduce )
    for ( unsigned l = 0; l < n; ++l )
    {
      merge_outcome( best[l], local[l] );
    }
  }

  SensitivityReport report;
  report.n = n;
  report.s = best[0].candidate.value;
  report.s_witness = InputWord( n, best[0].candidate.word );
  report.bs = best[n - 1].candidate.value;
  report.bs_witness = InputWord( n, best[n - 1].candidate.word );
  report.bs_blocks = best[n - 1].blocks;
  for ( const auto& b : best )
  {
    report.bs_l.push_back( b.candidate.value );
  }
  return report;
}

bool verify_block_witness( const TruthTable& f, const InputWord& x, const std::vector<VarMask>& blocks )
{
  check_dims( f, x );
  const VarMask all = ( VarMask( 1 ) << f.num_vars() ) - 1u;
  VarMask used = 0;
  const bool v = eval( f, x );
  for ( auto b : blocks )
  {
    if ( b == 0 || ( b & used ) || ( b & ~all ) )
    {
      return false;
    }
    used |= b;
    if ( eval( f, flip( x, b ) ) == v )
    {
      return false;
    }
  }
  return true;
}

} // namespace ncfkit
