#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncfkit
{

/// Variable indices are 0-based in the API: index i is x_{i+1} in text formats.
using VarIndex = unsigned;

/// Set of variable indices, bit i set iff x_{i+1} is a member.
using VarMask = std::uint32_t;

/// Hard upper bound on the number of variables a truth table may have.
inline constexpr unsigned kHardMaxVars = 30;

/*! \brief Size limits for tables, oracles and enumerators.

  Every limit may be raised by the caller up to kHardMaxVars; the defaults
  keep exhaustive computations in the sub-second range.
*/
struct Limits
{
  unsigned max_vars = 20;
  unsigned sensitivity_cap = 16;
  unsigned block_cap = 12;
  unsigned ncf_enum_cap = 6;
  unsigned mncf_enum_cap = 12;
};

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error
{
public:
  using Error::Error;
};

class InvalidArgument : public Error
{
public:
  using Error::Error;
};

class CapExceeded : public Error
{
public:
  CapExceeded( std::string what_for, unsigned n, unsigned cap )
      : Error( what_for + ": n=" + std::to_string( n ) + " exceeds cap " + std::to_string( cap ) ),
        n_( n ), cap_( cap )
  {
  }

  unsigned n() const noexcept { return n_; }
  unsigned cap() const noexcept { return cap_; }

private:
  unsigned n_;
  unsigned cap_;
};

/// Thrown by the text parsers; position is a 0-based character offset.
class ParseError : public Error
{
public:
  ParseError( std::size_t position, std::string token, const std::string& reason )
      : Error( "parse error at position " + std::to_string( position ) + " near '" + token + "': " + reason ),
        position_( position ), token_( std::move( token ) )
  {
  }

  std::size_t position() const noexcept { return position_; }
  const std::string& token() const noexcept { return token_; }

private:
  std::size_t position_;
  std::string token_;
};

inline unsigned popcount( VarMask m ) { return static_cast<unsigned>( std::popcount( m ) ); }

inline std::vector<VarIndex> mask_to_indices( VarMask m )
{
  std::vector<VarIndex> out;
  for ( VarIndex i = 0; m != 0; ++i, m >>= 1 )
  {
    if ( m & 1u )
    {
      out.push_back( i );
    }
  }
  return out;
}

inline VarMask indices_to_mask( const std::vector<VarIndex>& indices )
{
  VarMask m = 0;
  for ( auto i : indices )
  {
    m |= VarMask( 1 ) << i;
  }
  return m;
}

/// Orders index sets by cardinality, then lexicographically on ascending index lists.
inline bool size_then_lex_less( VarMask a, VarMask b )
{
  if ( popcount( a ) != popcount( b ) )
  {
    return popcount( a ) < popcount( b );
  }
  // Equal size: the set whose first differing element is smaller comes first.
  const VarMask diff = a ^ b;
  if ( diff == 0 )
  {
    return false;
  }
  const VarMask lowest = diff & ( ~diff + 1 );
  return ( a & lowest ) != 0;
}

} // namespace ncfkit
