// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ncfkit/complexity.hpp"
#include "ncfkit/mncf.hpp"
#include "ncfkit/ncf.hpp"
#include "ncfkit/text_io.hpp"
#include "oracles.hpp"

using namespace ncfkit;

namespace
{

constexpr std::uint64_t kSeed = 20240101;

struct Check
{
  bool ok = true;
  std::uint64_t cases = 0;
  std::string first_failure;

  void expect( bool condition, const std::function<std::string()>& what )
  {
    ++cases;
    if ( !condition && ok )
    {
      ok = false;
      first_failure = what();
    }
  }
};

template<typename Fn>
bool run( int id, const char* title, Fn&& body )
{
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try
  {
    body( c );
  }
  catch ( const std::exception& e )
  {
    c.ok = false;
    c.first_failure = std::string( "exception: " ) + e.what();
  }
  const auto secs = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  std::printf( "%s %d %s: %llu checks, %.1fs%s%s\n", c.ok ? "PASS" : "FAIL", id, title,
               static_cast<unsigned long long>( c.cases ), secs, c.ok ? "" : " -- ", c.first_failure.c_str() );
  std::fflush( stdout );
  return c.ok;
}

std::string describe( const NcfLayerSpec& spec ) { return to_string( spec ); }

// 1. closed-form sensitivity against the brute-force oracle
void formula_vs_oracle( Check& c )
{
  auto one = [&]( const NcfLayerSpec& spec ) {
    const auto f = oracle::cascade_table( spec );
    const auto formula = sensitivity_formula( profile_of( spec ) );
    const auto oracle_s = sensitivity( f ).value;
    c.expect( formula == oracle_s, [&] {
      return describe( spec ) + ": formula " + std::to_string( formula ) + ", oracle " + std::to_string( oracle_s );
    } );
  };
  for ( unsigned n = 2; n <= 5; ++n )
  {
    NcfStream stream( n );
    while ( auto spec = stream.next() )
    {
      one( *spec );
    }
  }
  std::mt19937_64 rng( kSeed );
  for ( unsigned n = 6; n <= 10; ++n )
  {
    for ( int t = 0; t < 1000; ++t )
    {
      one( random_ncf( n, rng ) );
    }
  }
}

// 2. bs = s and bs_l = s for every l
void bs_equals_s( Check& c )
{
  auto one = [&]( const NcfLayerSpec& spec ) {
    const auto f = oracle::cascade_table( spec );
    const auto r = analyze_sensitivity( f );
    c.expect( r.bs == r.s, [&] {
      return describe( spec ) + ": bs " + std::to_string( r.bs ) + ", s " + std::to_string( r.s );
    } );
    for ( unsigned l = 1; l <= r.n; ++l )
    {
      c.expect( r.bs_l[l - 1] == r.s, [&] {
        return describe( spec ) + ": bs_" + std::to_string( l ) + " " + std::to_string( r.bs_l[l - 1] ) + ", s " +
               std::to_string( r.s );
      } );
    }
  };
  for ( unsigned n = 2; n <= 4; ++n )
  {
    NcfStream stream( n );
    while ( auto spec = stream.next() )
    {
      one( *spec );
    }
  }
  std::mt19937_64 rng( kSeed + 1 );
  for ( unsigned n = 5; n <= 8; ++n )
  {
    for ( int t = 0; t < 200; ++t )
    {
      one( random_ncf( n, rng ) );
    }
  }
}

// 3. profile-independent bounds, with the bounds recomputed here from n and r
void bounds( Check& c )
{
  for ( unsigned n = 2; n <= 12; ++n )
  {
    CompositionStream stream( n );
    while ( auto p = stream.next() )
    {
      const unsigned r = p->layer_number();
      const unsigned s = sensitivity_formula( *p );
      // the formula itself is re-derived on the canonical representative
      std::vector<Layer> layers;
      VarIndex v = 0;
      for ( unsigned k : p->ks )
      {
        Layer layer;
        for ( unsigned i = 0; i < k; ++i )
        {
          layer.push_back( {v++, false} );
        }
        layers.push_back( layer );
      }
      const NcfLayerSpec spec( n, layers, false );
      const auto oracle_s = sensitivity( oracle::cascade_table( spec ) ).value;
      const auto where = [&] { return "profile [" + to_string( *p ) + "] s " + std::to_string( s ); };
      c.expect( s == oracle_s, where );

      if ( r == 1 )
      {
        c.expect( s == n, where );
      }
      else if ( r == n - 1 )
      {
        c.expect( s == ( n % 2 == 0 ? ( n + 2 ) / 2 : ( n + 1 ) / 2 ), where );
      }
      else
      {
        const unsigned upper = r % 2 == 1 ? n + 1 - ( r + 1 ) / 2 : n + 1 - r / 2;
        c.expect( 2 * s >= n + 1, where );
        c.expect( s <= upper, where );
      }
      const auto b = sensitivity_bounds( *p );
      c.expect( b.lower <= s && s <= b.upper, where );
    }
  }
}

// 4. MNCF counts and the set equality with a brute-force filter
void mncf_counts( Check& c )
{
  const unsigned expected[] = {0, 0, 4, 16, 92};
  for ( unsigned n = 2; n <= 4; ++n )
  {
    std::set<TruthTable> streamed;
    std::uint64_t emitted = 0;
    MncfStream stream( n );
    while ( auto m = stream.next() )
    {
      streamed.insert( oracle::cascade_table( m->to_ncf() ) );
      ++emitted;
    }
    const auto formula = count_mncf( n ).mncf_count;
    const auto independent = 4 * oracle::ordered_partitions_last_ge2( n );

    std::set<TruthTable> filtered;
    const std::uint64_t tables = std::uint64_t( 1 ) << ( 1u << n );
    for ( std::uint64_t bits = 0; bits < tables; ++bits )
    {
      const auto f = oracle::table_from_bits( n, bits );
      const auto m = is_monotone( f );
      if ( ( m == Monotonicity::increasing || m == Monotonicity::decreasing ) && is_ncf( recognize( f ) ) )
      {
        filtered.insert( f );
      }
    }
    const auto where = [&] {
      std::ostringstream out;
      out << "n=" << n << ": stream " << emitted << ", distinct " << streamed.size() << ", formula " << formula
          << ", independent " << independent << ", filter " << filtered.size();
      return out.str();
    };
    c.expect( emitted == expected[n], where );
    c.expect( streamed.size() == emitted, where );
    c.expect( formula == expected[n] && independent == expected[n], where );
    c.expect( filtered.size() == expected[n], where );
    c.expect( streamed == filtered, where );
  }
}

// 5. recognition inverts construction; accepted tables are the enumerated image
void recognition( Check& c )
{
  for ( unsigned n = 2; n <= 5; ++n )
  {
    NcfStream stream( n );
    std::set<TruthTable> image;
    while ( auto spec = stream.next() )
    {
      const auto f = construct( *spec );
      c.expect( f == oracle::cascade_table( *spec ), [&] { return describe( *spec ) + ": construct disagrees with cascade"; } );
      const auto r = recognize( f );
      c.expect( is_ncf( r ) && std::get<NcfLayerSpec>( r ) == *spec,
                [&] { return describe( *spec ) + ": not recovered by recognize"; } );
      image.insert( f );
    }
    if ( n == 3 || n == 4 )
    {
      std::set<TruthTable> accepted;
      const std::uint64_t tables = std::uint64_t( 1 ) << ( 1u << n );
      for ( std::uint64_t bits = 0; bits < tables; ++bits )
      {
        const auto f = oracle::table_from_bits( n, bits );
        if ( is_ncf( recognize( f ) ) )
        {
          accepted.insert( f );
        }
      }
      c.expect( accepted == image, [&] {
        return "n=" + std::to_string( n ) + ": accepted " + std::to_string( accepted.size() ) + ", image " +
               std::to_string( image.size() );
      } );
    }
  }
}

// 6. s, bs and every bs_l under permutation, xor-shift and complement
void invariance( Check& c )
{
  std::mt19937_64 rng( kSeed + 6 );
  for ( int t = 0; t < 500; ++t )
  {
    const unsigned n = 1 + static_cast<unsigned>( rng() % 8 );
    const auto f = oracle::random_table( n, rng );
    std::vector<VarIndex> sigma( n );
    std::iota( sigma.begin(), sigma.end(), 0u );
    std::shuffle( sigma.begin(), sigma.end(), rng );
    const InputWord a( n, static_cast<std::uint32_t>( rng() & ( ( 1u << n ) - 1 ) ) );

    const auto base = analyze_sensitivity( f );
    const std::pair<const char*, TruthTable> variants[] = {
        {"permute", permute( f, sigma )}, {"xor_shift", xor_shift( f, a )}, {"complement", complement( f )}};
    for ( const auto& [name, g] : variants )
    {
      const auto r = analyze_sensitivity( g );
      c.expect( r.s == base.s && r.bs == base.bs && r.bs_l == base.bs_l, [&, name = name] {
        return std::string( name ) + " changed s/bs/bs_l of " + to_table_string( f ) + " (trial " + std::to_string( t ) + ")";
      } );
    }
  }
}

// 7. packing minimal blocks gives the all-subsets block sensitivity
void packing_self_consistency( Check& c )
{
  std::mt19937_64 rng( kSeed + 7 );
  for ( int t = 0; t < 200; ++t )
  {
    const unsigned n = 1 + static_cast<unsigned>( rng() % 5 );
    const auto f = oracle::random_table( n, rng );
    const auto fast = block_sensitivity( f ).value;
    const auto direct = oracle::direct_block_sensitivity( f );
    c.expect( fast == direct, [&] {
      return to_table_string( f ) + ": packing " + std::to_string( fast ) + ", direct " + std::to_string( direct );
    } );
    for ( unsigned l = 1; l <= n; ++l )
    {
      const auto fast_l = l_block_sensitivity( f, l ).value;
      const auto direct_l = oracle::direct_l_block_sensitivity( f, l );
      c.expect( fast_l == direct_l, [&] {
        return to_table_string( f ) + ": bs_" + std::to_string( l ) + " packing " + std::to_string( fast_l ) +
               ", direct " + std::to_string( direct_l );
      } );
    }
  }
}

} // namespace

int main()
{
  bool ok = true;
  ok &= run( 1, "sensitivity formula equals brute force", formula_vs_oracle );
  ok &= run( 2, "block sensitivity equals sensitivity on NCFs", bs_equals_s );
  ok &= run( 3, "sensitivity bounds by layer number", bounds );
  ok &= run( 4, "monotone NCF characterization and count", mncf_counts );
  ok &= run( 5, "recognition uniqueness", recognition );
  ok &= run( 6, "invariance under permutation, shift, complement", invariance );
  ok &= run( 7, "minimal-block packing equals direct search", packing_self_consistency );
  return ok ? 0 : 1;
}
