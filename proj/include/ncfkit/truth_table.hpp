#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "common.hpp"

namespace ncfkit
{

/*! \brief An assignment (x_1, ..., x_n) to the variables of a function.

  Stored as an encoded word index: bit i of the index is the value of x_{i+1}.
  This is the same encoding a TruthTable uses for its positions.
*/
class InputWord
{
public:
  InputWord() = default;
  InputWord( unsigned n, std::uint32_t index );

  /// Bits listed as x_1, x_2, ..., x_n.
  InputWord( std::initializer_list<int> bits );
  static InputWord from_bits( const std::vector<bool>& bits );

  unsigned num_vars() const noexcept { return n_; }
  std::uint32_t index() const noexcept { return index_; }
  bool operator[]( VarIndex i ) const { return ( index_ >> i ) & 1u; }

  auto operator<=>( const InputWord& ) const = default;

private:
  unsigned n_ = 0;
  std::uint32_t index_ = 0;
};

/// Returns x with the bits in `block` complemented.
InputWord flip( const InputWord& x, VarMask block );

/*! \brief Complete value table of an n-variable Boolean function.

  Position j holds f(word(j)) where x_{i+1} is bit i of j. Tables are
  immutable; every transform returns a new table.
*/
class TruthTable
{
public:
  /// Constant-0 function of n variables.
  explicit TruthTable( unsigned n );

  static TruthTable constant( unsigned n, bool value );
  static TruthTable projection( unsigned n, VarIndex var );
  static TruthTable from_bits( unsigned n, const std::vector<bool>& values );

  /// Builds a table from a predicate on encoded word indices.
  template<typename Fn>
  static TruthTable tabulate( unsigned n, Fn&& fn )
  {
    TruthTable t( n );
    for ( std::uint64_t j = 0; j < t.num_bits(); ++j )
    {
      if ( fn( static_cast<std::uint32_t>( j ) ) )
      {
        t.blocks_[j >> 6] |= std::uint64_t( 1 ) << ( j & 63 );
      }
    }
    return t;
  }

  unsigned num_vars() const noexcept { return n_; }
  std::uint64_t num_bits() const noexcept { return std::uint64_t( 1 ) << n_; }

  bool get( std::uint32_t index ) const noexcept
  {
    return ( blocks_[index >> 6] >> ( index & 63 ) ) & 1u;
  }

  std::uint64_t count_ones() const noexcept;
  bool is_constant() const noexcept;

  const std::vector<std::uint64_t>& raw_blocks() const noexcept { return blocks_; }

  bool operator==( const TruthTable& other ) const = default;
  bool operator<( const TruthTable& other ) const;

private:
  friend TruthTable complement( const TruthTable& f );

  unsigned n_;
  std::vector<std::uint64_t> blocks_;
};

bool eval( const TruthTable& f, const InputWord& x );

struct Restriction
{
  TruthTable table;
  /// original_index[k] is the original variable index of the k-th surviving variable.
  std::vector<VarIndex> original_index;
};

/// A single fixed variable value used by restrict().
struct Assignment
{
  VarIndex var;
  bool value;
};

/// Fixes the listed variables; surviving variables keep their relative order.
Restriction restrict( const TruthTable& f, const std::vector<Assignment>& assignments );

/*! \brief g(x_1..x_n) = f(x_{sigma(1)}, ..., x_{sigma(n)}).

  `sigma` is 0-based: sigma[i] is the variable read in argument position i.
*/
TruthTable permute( const TruthTable& f, const std::vector<VarIndex>& sigma );

/// h(x) = f(x XOR a).
TruthTable xor_shift( const TruthTable& f, const InputWord& a );

TruthTable complement( const TruthTable& f );

enum class Monotonicity
{
  increasing,
  decreasing,
  both,
  neither
};

const char* to_string( Monotonicity m );

Monotonicity is_monotone( const TruthTable& f );

/// { i : there is an x with f(x) != f(x^i) }.
VarMask essential_variables( const TruthTable& f );

/// Set-of-monomials polynomial over GF(2); each monomial is a VarMask (0 is the constant 1).
class AnfPolynomial
{
public:
  explicit AnfPolynomial( unsigned n );
  AnfPolynomial( unsigned n, std::vector<VarMask> monomials );

  unsigned num_vars() const noexcept { return n_; }

  /// Sorted by degree descending, then lexicographically.
  const std::vector<VarMask>& monomials() const noexcept { return monomials_; }

  bool operator==( const AnfPolynomial& ) const = default;

private:
  unsigned n_;
  std::vector<VarMask> monomials_;
};

AnfPolynomial to_anf( const TruthTable& f );
TruthTable from_anf( const AnfPolynomial& p );

} // namespace ncfkit

template<>
struct std::hash<ncfkit::TruthTable>
{
  std::size_t operator()( const ncfkit::TruthTable& t ) const noexcept;
};
