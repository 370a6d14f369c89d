#include <doctest.h>

#include <numeric>
#include <random>

#include "ncfkit/text_io.hpp"
#include "ncfkit/truth_table.hpp"
#include "oracles.hpp"

using namespace ncfkit;

namespace
{

TruthTable table( const char* bits ) { return parse_table( bits ); }

const auto AND2 = table( "0001" );
const auto OR2 = table( "0111" );
const auto NAND2 = table( "1110" );
const auto XOR2 = table( "0110" );

} // namespace

TEST_CASE( "eval reads the LSB-first encoding" )
{
  CHECK( eval( AND2, InputWord{1, 1} ) );
  CHECK_FALSE( eval( AND2, InputWord{0, 1} ) );
  const auto parity3 = TruthTable::tabulate( 3, []( std::uint32_t j ) { return std::popcount( j ) % 2 == 1; } );
  CHECK_FALSE( eval( parity3, InputWord{1, 1, 0} ) );
  CHECK_THROWS_AS( eval( AND2, InputWord{1, 1, 1} ), DimensionError );

  // x1 is bit 0: the projection on x1 reads 0101
  CHECK( to_table_string( TruthTable::projection( 2, 0 ) ) == "0101" );
}

TEST_CASE( "flip" )
{
  CHECK( flip( InputWord{1, 0, 1}, 0b001 ) == InputWord{0, 0, 1} );
  CHECK( flip( InputWord{1, 0, 1}, 0 ) == InputWord{1, 0, 1} );
  CHECK( flip( InputWord{0, 0}, 0b11 ) == InputWord{1, 1} );
  CHECK_THROWS_AS( flip( InputWord{0, 0}, 0b100 ), InvalidArgument );

  std::mt19937_64 rng( 7 );
  for ( int t = 0; t < 100; ++t )
  {
    const InputWord x( 6, static_cast<std::uint32_t>( rng() & 63 ) );
    const VarMask s = static_cast<VarMask>( rng() & 63 );
    CHECK( flip( flip( x, s ), s ) == x );
  }
}

TEST_CASE( "restrict" )
{
  auto r = restrict( AND2, {{0, true}} );
  CHECK( to_table_string( r.table ) == "01" );
  CHECK( r.original_index == std::vector<VarIndex>{1} );
  CHECK( restrict( AND2, {{0, false}} ).table == TruthTable::constant( 1, false ) );

  // x1 (x2 + 1) with x2 = 0 is x1
  const auto f = from_anf( parse_anf( "x1*x2 + x1" ) );
  CHECK( to_table_string( f ) == "0100" );
  CHECK( restrict( f, {{1, false}} ).table == TruthTable::projection( 1, 0 ) );

  CHECK_THROWS_AS( restrict( AND2, {{0, true}, {0, false}} ), InvalidArgument );
  CHECK_THROWS_AS( restrict( AND2, {{0, true}, {1, false}} ), InvalidArgument );
  CHECK_THROWS_AS( restrict( AND2, {{2, true}} ), InvalidArgument );

  SUBCASE( "two successive restrictions equal one combined restriction" )
  {
    std::mt19937_64 rng( 11 );
    for ( int t = 0; t < 50; ++t )
    {
      const auto g = oracle::random_table( 6, rng );
      const bool a = rng() & 1u, b = rng() & 1u;
      const auto step = restrict( g, {{1, a}} );
      // original x5 is survivor index 3 after dropping x2
      const auto twice = restrict( step.table, {{3, b}} );
      const auto once = restrict( g, {{1, a}, {4, b}} );
      CHECK( twice.table == once.table );
      CHECK( once.original_index == std::vector<VarIndex>{0, 2, 3, 5} );
    }
  }
}

TEST_CASE( "permute" )
{
  const auto x1 = TruthTable::projection( 2, 0 );
  CHECK( permute( x1, {1, 0} ) == TruthTable::projection( 2, 1 ) );
  CHECK( permute( AND2, {0, 1} ) == AND2 );

  // x1 (x2 + 1) -> x2 (x1 + 1), tabulated: 0100 -> 0010
  const auto f = table( "0100" );
  CHECK( to_table_string( permute( f, {1, 0} ) ) == "0010" );

  CHECK_THROWS_AS( permute( AND2, {0, 0} ), InvalidArgument );
  CHECK_THROWS_AS( permute( AND2, {0} ), InvalidArgument );

  SUBCASE( "g(x) = f(x_sigma(1), ..., x_sigma(n)) pointwise" )
  {
    std::mt19937_64 rng( 3 );
    const auto g = oracle::random_table( 5, rng );
    std::vector<VarIndex> sigma{3, 0, 4, 1, 2};
    const auto h = permute( g, sigma );
    for ( std::uint32_t w = 0; w < 32; ++w )
    {
      std::uint32_t arg = 0;
      for ( unsigned i = 0; i < 5; ++i )
      {
        arg |= ( ( w >> sigma[i] ) & 1u ) << i;
      }
      CHECK( h.get( w ) == g.get( arg ) );
    }
  }
}

TEST_CASE( "xor_shift and complement" )
{
  CHECK( xor_shift( AND2, InputWord{0, 0} ) == AND2 );
  // (x1 + 1)(x2 + 1) is NOR: only word 00 maps to 1
  CHECK( to_table_string( xor_shift( AND2, InputWord{1, 1} ) ) == "1000" );
  CHECK( xor_shift( TruthTable::projection( 2, 0 ), InputWord{1, 0} ) == complement( TruthTable::projection( 2, 0 ) ) );
  CHECK_THROWS_AS( xor_shift( AND2, InputWord{1} ), DimensionError );

  CHECK( complement( AND2 ) == NAND2 );
  CHECK( complement( TruthTable::constant( 3, false ) ) == TruthTable::constant( 3, true ) );

  std::mt19937_64 rng( 5 );
  for ( unsigned n = 1; n <= 9; ++n )
  {
    const auto f = oracle::random_table( n, rng );
    const InputWord a( n, static_cast<std::uint32_t>( rng() & ( ( 1u << n ) - 1 ) ) );
    std::vector<VarIndex> sigma( n );
    std::iota( sigma.begin(), sigma.end(), 0u );
    std::shuffle( sigma.begin(), sigma.end(), rng );

    CHECK( complement( complement( f ) ) == f );
    CHECK( xor_shift( xor_shift( f, a ), a ) == f );
    CHECK( permute( f, sigma ).count_ones() == f.count_ones() );
    CHECK( xor_shift( f, a ).count_ones() == f.count_ones() );
    CHECK( complement( f ).count_ones() == f.num_bits() - f.count_ones() );
  }
}

TEST_CASE( "ANF conversion" )
{
  CHECK( to_anf( AND2 ) == AnfPolynomial( 2, {0b11} ) );
  CHECK( to_anf( TruthTable::constant( 2, true ) ) == AnfPolynomial( 2, {0} ) );
  CHECK( to_anf( OR2 ) == AnfPolynomial( 2, {0b01, 0b10, 0b11} ) );
  CHECK( from_anf( AnfPolynomial( 2, {0b01, 0b10, 0b11} ) ) == OR2 );
  CHECK( to_string( to_anf( OR2 ) ) == "x1*x2 + x1 + x2" );

  // equal monomials cancel
  CHECK( AnfPolynomial( 3, {0b101, 0b101, 0b1} ) == AnfPolynomial( 3, {0b1} ) );
  CHECK_THROWS_AS( AnfPolynomial( 2, {0b100} ), InvalidArgument );

  SUBCASE( "round trip over every table with n <= 4" )
  {
    for ( unsigned n = 1; n <= 4; ++n )
    {
      const std::uint64_t tables = std::uint64_t( 1 ) << ( 1u << n );
      for ( std::uint64_t bits = 0; bits < tables; ++bits )
      {
        const auto f = oracle::table_from_bits( n, bits );
        REQUIRE( from_anf( to_anf( f ) ) == f );
      }
    }
  }
  SUBCASE( "round trip on random tables up to n = 10" )
  {
    std::mt19937_64 rng( 17 );
    for ( unsigned n = 5; n <= 10; ++n )
    {
      for ( int t = 0; t < 5; ++t )
      {
        const auto f = oracle::random_table( n, rng );
        CHECK( from_anf( to_anf( f ) ) == f );
      }
    }
  }
}

TEST_CASE( "monotonicity" )
{
  CHECK( is_monotone( AND2 ) == Monotonicity::increasing );
  CHECK( is_monotone( NAND2 ) == Monotonicity::decreasing );
  CHECK( is_monotone( XOR2 ) == Monotonicity::neither );
  CHECK( is_monotone( TruthTable::constant( 3, true ) ) == Monotonicity::both );

  // complement swaps the direction; compare against the all-pairs definition
  for ( std::uint64_t bits = 0; bits < 65536; ++bits )
  {
    const auto f = oracle::table_from_bits( 4, bits );
    bool inc = true, dec = true;
    for ( std::uint32_t x = 0; x < 16; ++x )
    {
      for ( std::uint32_t y = 0; y < 16; ++y )
      {
        if ( ( x & y ) == x )
        {
          inc = inc && f.get( x ) <= f.get( y );
          dec = dec && f.get( x ) >= f.get( y );
        }
      }
    }
    const auto m = is_monotone( f );
    REQUIRE( ( m == Monotonicity::increasing ) == ( inc && !dec ) );
    REQUIRE( ( m == Monotonicity::decreasing ) == ( dec && !inc ) );
    REQUIRE( ( m == Monotonicity::both ) == ( inc && dec ) );
    const auto mc = is_monotone( complement( f ) );
    if ( m == Monotonicity::increasing )
    {
      REQUIRE( mc == Monotonicity::decreasing );
    }
    if ( m == Monotonicity::decreasing )
    {
      REQUIRE( mc == Monotonicity::increasing );
    }
  }
}

TEST_CASE( "essential variables" )
{
  CHECK( essential_variables( AND2 ) == 0b11 );
  CHECK( essential_variables( TruthTable::constant( 2, false ) ) == 0 );
  const auto x1x2 = TruthTable::tabulate( 3, []( std::uint32_t j ) { return ( j & 3u ) == 3u; } );
  CHECK( essential_variables( x1x2 ) == 0b011 );
}

TEST_CASE( "table construction limits" )
{
  CHECK_THROWS_AS( TruthTable( 0 ), InvalidArgument );
  CHECK_THROWS_AS( TruthTable( kHardMaxVars + 1 ), InvalidArgument );
  CHECK_THROWS_AS( TruthTable::from_bits( 2, {true, false} ), DimensionError );
  CHECK_THROWS_AS( InputWord( 2, 4 ), InvalidArgument );
}
