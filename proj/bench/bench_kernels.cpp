// Parallel kernels against their serial references.

#include <random>

#include <benchmark/benchmark.h>

#include "ncfkit/complexity.hpp"
#include "ncfkit/ncf.hpp"

using namespace ncfkit;

namespace
{

TruthTable random_table( unsigned n )
{
  std::mt19937_64 rng( 1234 + n );
  return TruthTable::tabulate( n, [&rng]( std::uint32_t ) { return ( rng() & 1u ) != 0; } );
}

TruthTable random_ncf_table( unsigned n )
{
  std::mt19937_64 rng( 99 + n );
  return construct( random_ncf( n, rng ) );
}

Limits wide()
{
  Limits l;
  l.sensitivity_cap = 24;
  l.block_cap = 16;
  return l;
}

void BM_sensitivity_parallel( benchmark::State& state )
{
  const auto f = random_table( static_cast<unsigned>( state.range( 0 ) ) );
  const auto limits = wide();
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( sensitivity( f, limits ) );
  }
}

void BM_sensitivity_serial( benchmark::State& state )
{
  const auto f = random_table( static_cast<unsigned>( state.range( 0 ) ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( serial::sensitivity( f ) );
  }
}

void BM_block_sensitivity_parallel( benchmark::State& state )
{
  const auto f = random_ncf_table( static_cast<unsigned>( state.range( 0 ) ) );
  const auto limits = wide();
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( block_sensitivity( f, limits ) );
  }
}

void BM_block_sensitivity_serial( benchmark::State& state )
{
  const auto f = random_ncf_table( static_cast<unsigned>( state.range( 0 ) ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( serial::block_sensitivity( f ) );
  }
}

} // namespace

BENCHMARK( BM_sensitivity_parallel )->DenseRange( 12, 20, 4 )->Unit( benchmark::kMillisecond );
BENCHMARK( BM_sensitivity_serial )->DenseRange( 12, 20, 4 )->Unit( benchmark::kMillisecond );
BENCHMARK( BM_block_sensitivity_parallel )->DenseRange( 6, 10, 2 )->Unit( benchmark::kMillisecond );
BENCHMARK( BM_block_sensitivity_serial )->DenseRange( 6, 10, 2 )->Unit( benchmark::kMillisecond );

BENCHMARK_MAIN();
