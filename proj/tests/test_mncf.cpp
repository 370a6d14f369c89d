#include <doctest.h>

#include <set>

#include "ncfkit/mncf.hpp"
#include "ncfkit/text_io.hpp"
#include "oracles.hpp"

using namespace ncfkit;

namespace
{

template<typename Stream>
std::size_t drain( Stream&& s )
{
  std::size_t count = 0;
  while ( s.next() )
  {
    ++count;
  }
  return count;
}

} // namespace

TEST_CASE( "composition order" )
{
  CompositionStream stream( 4 );
  std::vector<std::vector<unsigned>> got;
  while ( auto p = stream.next() )
  {
    got.push_back( p->ks );
  }
  CHECK( got == std::vector<std::vector<unsigned>>{{4}, {1, 3}, {2, 2}, {1, 1, 2}} );

  CHECK( drain( CompositionStream( 2 ) ) == 1 );
  // compositions of n with last part >= 2 number 2^(n-2)
  for ( unsigned n = 2; n <= 12; ++n )
  {
    CHECK( drain( CompositionStream( n ) ) == ( std::size_t( 1 ) << ( n - 2 ) ) );
  }
}

TEST_CASE( "ordered partitions" )
{
  OrderedPartitionStream stream( Profile{{1, 2}} );
  std::vector<std::vector<std::vector<VarIndex>>> got;
  while ( auto p = stream.next() )
  {
    got.push_back( *p );
  }
  CHECK( got == std::vector<std::vector<std::vector<VarIndex>>>{{{0}, {1, 2}}, {{1}, {0, 2}}, {{2}, {0, 1}}} );

  CHECK( drain( OrderedPartitionStream( Profile{{2, 2}} ) ) == 6 );
  CHECK( drain( OrderedPartitionStream( Profile{{1, 1, 2}} ) ) == 12 );
  CHECK( drain( OrderedPartitionStream( Profile{{2, 3, 2}} ) ) == 210 );
}

TEST_CASE( "binomials and multinomials" )
{
  CHECK( binomial( 5, 2 ) == 10 );
  CHECK( binomial( 5, 0 ) == 1 );
  CHECK( binomial( 3, 4 ) == 0 );
  CHECK( multinomial( Profile{{1, 1, 2}} ) == 12 );
  CHECK( multinomial( Profile{{2, 3, 2}} ) == 210 );
}

TEST_CASE( "MNCF counts" )
{
  CHECK( count_mncf( 2 ).mncf_count == 4 );
  CHECK( count_mncf( 3 ).mncf_count == 16 );
  CHECK( count_mncf( 4 ).mncf_count == 92 );

  const auto t = count_mncf( 4 );
  REQUIRE( t.per_profile.size() == 4 );
  CHECK( t.per_profile[1].first == Profile{{1, 3}} );
  CHECK( t.per_profile[1].second == 4 );

  // 4 times the ordered partitions with last block >= 2
  for ( unsigned n = 2; n <= 20; ++n )
  {
    CHECK( count_mncf( n ).mncf_count == 4 * oracle::ordered_partitions_last_ge2( n ) );
  }
  CHECK( count_mncf( 20 ).mncf_count > BigInt( std::numeric_limits<std::uint64_t>::max() ) );
  CHECK_THROWS_AS( count_mncf( 21 ), CapExceeded );
  CHECK_THROWS_AS( count_mncf( 1 ), InvalidArgument );
}

TEST_CASE( "MNCF stream" )
{
  for ( unsigned n = 2; n <= 6; ++n )
  {
    MncfStream stream( n );
    std::set<TruthTable> tables;
    std::size_t count = 0;
    while ( auto m = stream.next() )
    {
      const auto spec = m->to_ncf();
      const auto f = construct( spec );
      CHECK( is_mncf( spec ) );
      const auto dir = mncf_direction( spec );
      REQUIRE( ( dir == Monotonicity::increasing || dir == Monotonicity::decreasing ) );
      CHECK( is_monotone( f ) == dir );
      CHECK( dir == ( m->a == m->b ? Monotonicity::increasing : Monotonicity::decreasing ) );
      tables.insert( f );
      ++count;
    }
    CHECK( tables.size() == count );
    CHECK( BigInt( count ) == count_mncf( n ).mncf_count );
  }

  // NAND: first-layer input 0, b = 1, decreasing
  const auto nand = parse_layers( "[x1:0 x2:0] b=1" );
  CHECK( mncf_direction( nand ) == Monotonicity::decreasing );
  CHECK( to_table_string( construct( nand ) ) == "1110" );

  CHECK_FALSE( is_mncf( parse_layers( "[x1:0 x2:1] b=0" ) ) );
  CHECK_FALSE( is_mncf( parse_layers( "[x1:0 | x2:0 x3:0] b=0" ) ) );
  CHECK( is_mncf( parse_layers( "[x1:0 | x2:1 x3:1] b=0" ) ) );
  CHECK( mncf_direction( parse_layers( "[x1:0 x2:1] b=0" ) ) == Monotonicity::neither );

  CHECK( drain( MncfStream( 4, Profile{{2, 2}} ) ) == 24 );
  CHECK_THROWS_AS( MncfStream( 13 ), CapExceeded );
}

TEST_CASE( "MNCFs are exactly the monotone NCFs, n <= 4" )
{
  for ( unsigned n = 2; n <= 4; ++n )
  {
    std::set<TruthTable> streamed;
    MncfStream mncfs( n );
    while ( auto m = mncfs.next() )
    {
      streamed.insert( construct( m->to_ncf() ) );
    }
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
    CHECK( streamed == filtered );
  }
}

TEST_CASE( "NCF stream" )
{
  for ( unsigned n = 2; n <= 5; ++n )
  {
    NcfStream stream( n );
    std::set<TruthTable> tables;
    std::size_t count = 0;
    while ( auto s = stream.next() )
    {
      tables.insert( construct( *s ) );
      ++count;
    }
    const BigInt expected = ( BigInt( 1 ) << ( n + 1 ) ) * oracle::ordered_partitions_last_ge2( n );
    CHECK( BigInt( count ) == expected );
    CHECK( tables.size() == count );
  }

  SUBCASE( "each ordered partition carries 2^(n+1) distinct functions" )
  {
    std::set<TruthTable> tables;
    NcfStream stream( 4, Profile{{1, 1, 2}} );
    std::size_t count = 0;
    while ( auto s = stream.next() )
    {
      tables.insert( construct( *s ) );
      ++count;
    }
    CHECK( count == 12 * 32 );
    CHECK( tables.size() == count );
  }

  SUBCASE( "order within a partition: inputs, then b" )
  {
    NcfStream stream( 2 );
    const auto first = stream.next();
    const auto second = stream.next();
    const auto third = stream.next();
    CHECK( to_string( *first ) == "[x1:0 x2:0] b=0" );
    CHECK( to_string( *second ) == "[x1:0 x2:0] b=1" );
    CHECK( to_string( *third ) == "[x1:1 x2:0] b=0" );
  }

  CHECK_THROWS_AS( NcfStream( 7 ), CapExceeded );
  CHECK_THROWS_AS( NcfStream( 1 ), InvalidArgument );
  CHECK_THROWS_AS( NcfStream( 4, Profile{{1, 2}} ), InvalidArgument );
}
