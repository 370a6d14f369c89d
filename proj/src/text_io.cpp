#include "ncfkit/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ncfkit
{

namespace
{

class Cursor
{
public:
  explicit Cursor( std::string_view text ) : text_( text ) {}

  void skip_ws()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  /// The token starting at `at`, ended by whitespace or punctuation, for error messages.
  std::string token_at( std::size_t at ) const
  {
    if ( at >= text_.size() )
    {
      return "<end of input>";
    }
    auto end = at;
    while ( end < text_.size() && !std::isspace( static_cast<unsigned char>( text_[end] ) ) &&
            std::string_view( "[]|:*+=," ).find( text_[end] ) == std::string_view::npos )
    {
      ++end;
    }
    return std::string( text_.substr( at, std::max<std::size_t>( end - at, 1 ) ) );
  }

  [[noreturn]] void fail( const std::string& reason ) const { fail_at( pos_, reason ); }

  [[noreturn]] void fail_at( std::size_t at, const std::string& reason ) const
  {
    throw ParseError( at, token_at( at ), reason );
  }

  void expect( char c, const std::string& reason )
  {
    skip_ws();
    if ( peek() != c )
    {
      fail( reason );
    }
    advance();
  }

  unsigned read_number( const std::string& what )
  {
    if ( !std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      fail( "expected " + what );
    }
    const auto start = pos_;
    unsigned long value = 0;
    while ( std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      value = value * 10 + static_cast<unsigned long>( peek() - '0' );
      if ( value > 1000000 )
      {
        fail_at( start, what + " too large" );
      }
      advance();
    }
    return static_cast<unsigned>( value );
  }

  /// Parses "x<i>" and returns the 0-based variable index.
  VarIndex read_variable()
  {
    skip_ws();
    const auto start = pos_;
    if ( peek() != 'x' && peek() != 'X' )
    {
      fail( "expected a variable x<i>" );
    }
    advance();
    const auto i = read_number( "variable index" );
    if ( i < 1 || i > kHardMaxVars )
    {
      fail_at( start, "variable index must be in 1.." + std::to_string( kHardMaxVars ) );
    }
    return i - 1;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
  {
    s.remove_prefix( 1 );
  }
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
  {
    s.remove_suffix( 1 );
  }
  return s;
}

std::size_t leading_ws( std::string_view s )
{
  std::size_t k = 0;
  while ( k < s.size() && std::isspace( static_cast<unsigned char>( s[k] ) ) )
  {
    ++k;
  }
  return k;
}

void check_vars_cap( unsigned n, const Limits& limits, std::size_t position, const std::string& token )
{
  if ( n > limits.max_vars || n > kHardMaxVars )
  {
    throw CapExceeded( "input at position " + std::to_string( position ) + " ('" + token + "')", n,
                       std::min( limits.max_vars, kHardMaxVars ) );
  }
}

} // namespace

InputFormat parse_format_name( std::string_view name )
{
  static const std::map<std::string_view, InputFormat> names{{"auto", InputFormat::automatic},
                                                             {"table", InputFormat::table},
                                                             {"hex", InputFormat::hex},
                                                             {"anf", InputFormat::anf},
                                                             {"layers", InputFormat::layers}};
  auto it = names.find( name );
  if ( it == names.end() )
  {
    throw ParseError( 0, std::string( name ), "unknown format (expected auto, table, hex, anf or layers)" );
  }
  return it->second;
}

const char* to_string( InputFormat format )
{
  switch ( format )
  {
  case InputFormat::automatic:
    return "auto";
  case InputFormat::table:
    return "table";
  case InputFormat::hex:
    return "hex";
  case InputFormat::anf:
    return "anf";
  case InputFormat::layers:
    return "layers";
  }
  return "auto";
}

InputFormat detect_format( std::string_view text )
{
  text = trim( text );
  if ( text.starts_with( "0x" ) || text.starts_with( "0X" ) )
  {
    return InputFormat::hex;
  }
  if ( text.starts_with( "[" ) )
  {
    return InputFormat::layers;
  }
  // any digit run is meant as a table, so a stray digit is reported as a bad table entry
  if ( text.size() >= 2 && std::all_of( text.begin(), text.end(), []( char c ) { return std::isdigit( static_cast<unsigned char>( c ) ); } ) )
  {
    return InputFormat::table;
  }
  return InputFormat::anf;
}

TruthTable parse_table( std::string_view text, const Limits& limits )
{
  const auto offset = leading_ws( text );
  const auto body = trim( text );
  for ( std::size_t j = 0; j < body.size(); ++j )
  {
    if ( body[j] != '0' && body[j] != '1' )
    {
      throw ParseError( offset + j, std::string( 1, body[j] ), "table entries must be 0 or 1" );
    }
  }
  const auto len = body.size();
  if ( len < 2 || ( len & ( len - 1 ) ) != 0 )
  {
    throw ParseError( offset, std::string( body ), "table length " + std::to_string( len ) + " is not 2^n with n >= 1" );
  }
  const auto n = static_cast<unsigned>( std::countr_zero( len ) );
  check_vars_cap( n, limits, offset, std::string( body.substr( 0, 16 ) ) );
  return TruthTable::tabulate( n, [&body]( std::uint32_t j ) { return body[j] == '1'; } );
}

TruthTable parse_hex( std::string_view text, const Limits& limits )
{
  const auto offset = leading_ws( text );
  auto body = trim( text );
  if ( !( body.starts_with( "0x" ) || body.starts_with( "0X" ) ) )
  {
    throw ParseError( offset, std::string( body.substr( 0, 8 ) ), "hex tables start with 0x" );
  }
  body.remove_prefix( 2 );
  const auto digits = body.size();
  if ( digits == 0 || ( digits & ( digits - 1 ) ) != 0 )
  {
    throw ParseError( offset, std::string( trim( text ) ),
                      "hex table needs 2^n / 4 digits for some n >= 2, got " + std::to_string( digits ) );
  }
  const auto n = static_cast<unsigned>( std::countr_zero( digits ) ) + 2;
  check_vars_cap( n, limits, offset, std::string( trim( text ).substr( 0, 16 ) ) );

  std::vector<std::uint8_t> nibbles( digits );
  for ( std::size_t d = 0; d < digits; ++d )
  {
    const char c = static_cast<char>( std::tolower( static_cast<unsigned char>( body[d] ) ) );
    if ( c >= '0' && c <= '9' )
    {
      nibbles[d] = static_cast<std::uint8_t>( c - '0' );
    }
    else if ( c >= 'a' && c <= 'f' )
    {
      nibbles[d] = static_cast<std::uint8_t>( c - 'a' + 10 );
    }
    else
    {
      throw ParseError( offset + 2 + d, std::string( 1, body[d] ), "not a hex digit" );
    }
  }
  // the last digit holds positions 0..3
  return TruthTable::tabulate( n, [&]( std::uint32_t j ) { return ( nibbles[digits - 1 - j / 4] >> ( j % 4 ) ) & 1u; } );
}

AnfPolynomial parse_anf( std::string_view text, std::optional<unsigned> n, const Limits& limits )
{
  Cursor cur( text );
  std::vector<VarMask> monomials;
  unsigned max_var = 0;

  cur.skip_ws();
  if ( cur.peek() == '0' )
  {
    cur.advance();
    cur.skip_ws();
    if ( !cur.at_end() )
    {
      cur.fail( "unexpected input after the zero polynomial" );
    }
  }
  else
  {
    while ( true )
    {
      cur.skip_ws();
      VarMask term = 0;
      if ( cur.peek() == '1' )
      {
        cur.advance();
      }
      else
      {
        while ( true )
        {
          const auto start = cur.pos();
          const auto v = cur.read_variable();
          if ( term & ( VarMask( 1 ) << v ) )
          {
            cur.fail_at( start, "variable repeated within a monomial" );
          }
          term |= VarMask( 1 ) << v;
          max_var = std::max( max_var, v + 1 );
          cur.skip_ws();
          if ( cur.peek() != '*' )
          {
            break;
          }
          cur.advance();
        }
      }
      monomials.push_back( term );
      cur.skip_ws();
      if ( cur.at_end() )
      {
        break;
      }
      if ( cur.peek() != '+' )
      {
        cur.fail( "expected '+' between terms" );
      }
      cur.advance();
    }
  }

  const unsigned vars = n.value_or( std::max( max_var, 1u ) );
  if ( vars < max_var )
  {
    throw ParseError( 0, std::string( trim( text ).substr( 0, 16 ) ),
                      "polynomial uses x" + std::to_string( max_var ) + " but n=" + std::to_string( vars ) );
  }
  check_vars_cap( vars, limits, 0, std::string( trim( text ).substr( 0, 16 ) ) );
  return AnfPolynomial( vars, std::move( monomials ) );
}

NcfLayerSpec parse_layers( std::string_view text, const Limits& limits )
{
  Cursor cur( text );
  cur.expect( '[', "layer spec must start with '['" );

  std::vector<Layer> layers;
  std::vector<std::size_t> layer_start;
  std::map<VarIndex, std::size_t> var_pos;
  Layer layer;
  layer_start.push_back( cur.pos() );
  while ( true )
  {
    cur.skip_ws();
    const char c = cur.peek();
    if ( c == '|' || c == ']' )
    {
      if ( layer.empty() )
      {
        cur.fail( "empty layer" );
      }
      layers.push_back( std::move( layer ) );
      layer.clear();
      cur.advance();
      if ( c == ']' )
      {
        break;
      }
      layer_start.push_back( cur.pos() );
      continue;
    }
    if ( cur.at_end() )
    {
      cur.fail( "missing ']'" );
    }
    const auto start = cur.pos();
    const auto v = cur.read_variable();
    if ( var_pos.count( v ) )
    {
      cur.fail_at( start, "variable x" + std::to_string( v + 1 ) + " appears more than once" );
    }
    var_pos[v] = start;
    if ( cur.peek() != ':' )
    {
      cur.fail( "expected ':' after variable" );
    }
    cur.advance();
    const char a = cur.peek();
    if ( a != '0' && a != '1' )
    {
      cur.fail( "canalyzing input must be 0 or 1" );
    }
    cur.advance();
    layer.push_back( {v, a == '1'} );
  }

  cur.skip_ws();
  if ( cur.peek() != 'b' )
  {
    cur.fail( "expected b=<0|1> after the layers" );
  }
  cur.advance();
  cur.expect( '=', "expected '=' after b" );
  cur.skip_ws();
  const char b = cur.peek();
  if ( b != '0' && b != '1' )
  {
    cur.fail( "output constant b must be 0 or 1" );
  }
  cur.advance();
  cur.skip_ws();
  if ( !cur.at_end() )
  {
    cur.fail( "unexpected trailing input" );
  }

  const auto n = static_cast<unsigned>( var_pos.size() );
  for ( const auto& [v, pos] : var_pos )
  {
    if ( v >= n )
    {
      cur.fail_at( pos, "variables must be exactly x1..x" + std::to_string( n ) + " (missing some index below x" +
                            std::to_string( v + 1 ) + ")" );
    }
  }
  if ( n < 2 )
  {
    cur.fail_at( 0, "an NCF needs at least two variables" );
  }
  if ( layers.back().size() < 2 )
  {
    cur.fail_at( layer_start.back(), "last layer must contain at least two variables" );
  }
  check_vars_cap( n, limits, 0, "[" );
  return NcfLayerSpec( n, std::move( layers ), b == '1' );
}

Profile parse_profile( std::string_view text )
{
  Cursor cur( text );
  cur.skip_ws();
  const bool bracketed = cur.peek() == '[';
  if ( bracketed )
  {
    cur.advance();
  }
  Profile p;
  while ( true )
  {
    cur.skip_ws();
    const auto start = cur.pos();
    const auto k = cur.read_number( "layer size" );
    if ( k == 0 )
    {
      cur.fail_at( start, "layer sizes must be positive" );
    }
    p.ks.push_back( k );
    cur.skip_ws();
    if ( cur.peek() != ',' )
    {
      break;
    }
    cur.advance();
  }
  if ( bracketed )
  {
    cur.expect( ']', "missing ']'" );
  }
  cur.skip_ws();
  if ( !cur.at_end() )
  {
    cur.fail( "unexpected trailing input" );
  }
  if ( p.ks.back() < 2 )
  {
    cur.fail_at( 0, "last layer size must be at least 2" );
  }
  if ( p.num_vars() > kHardMaxVars )
  {
    cur.fail_at( 0, "profile describes too many variables" );
  }
  return p;
}

ParsedFunction parse_function( std::string_view text, InputFormat format, std::optional<unsigned> anf_vars,
                               const Limits& limits )
{
  if ( format == InputFormat::automatic )
  {
    format = detect_format( text );
  }
  switch ( format )
  {
  case InputFormat::table:
    return {format, parse_table( text, limits ), std::nullopt};
  case InputFormat::hex:
    return {format, parse_hex( text, limits ), std::nullopt};
  case InputFormat::anf:
    return {format, from_anf( parse_anf( text, anf_vars, limits ) ), std::nullopt};
  case InputFormat::layers:
  {
    auto spec = parse_layers( text, limits );
    auto table = construct( spec );
    return {format, std::move( table ), std::move( spec )};
  }
  case InputFormat::automatic:
    break;
  }
  throw ParseError( 0, std::string( text ), "could not determine input format" );
}

std::string to_table_string( const TruthTable& f )
{
  std::string s( f.num_bits(), '0' );
  for ( std::uint64_t j = 0; j < f.num_bits(); ++j )
  {
    if ( f.get( static_cast<std::uint32_t>( j ) ) )
    {
      s[j] = '1';
    }
  }
  return s;
}

std::string to_hex_string( const TruthTable& f )
{
  if ( f.num_vars() < 2 )
  {
    throw InvalidArgument( "hex form needs n >= 2" );
  }
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t count = f.num_bits() / 4;
  std::string s = "0x";
  for ( std::size_t d = count; d-- > 0; )
  {
    unsigned nibble = 0;
    for ( unsigned b = 0; b < 4; ++b )
    {
      nibble |= static_cast<unsigned>( f.get( static_cast<std::uint32_t>( d * 4 + b ) ) ) << b;
    }
    s += digits[nibble];
  }
  return s;
}

std::string to_string( const AnfPolynomial& p )
{
  if ( p.monomials().empty() )
  {
    return "0";
  }
  std::string s;
  for ( auto m : p.monomials() )
  {
    if ( !s.empty() )
    {
      s += " + ";
    }
    if ( m == 0 )
    {
      s += "1";
      continue;
    }
    bool first = true;
    for ( auto v : mask_to_indices( m ) )
    {
      if ( !first )
      {
        s += "*";
      }
      s += "x" + std::to_string( v + 1 );
      first = false;
    }
  }
  return s;
}

std::string to_string( const NcfLayerSpec& spec )
{
  std::string s = "[";
  bool first_layer = true;
  for ( const auto& layer : spec.layers() )
  {
    if ( !first_layer )
    {
      s += " | ";
    }
    first_layer = false;
    bool first = true;
    for ( const auto& lit : layer )
    {
      if ( !first )
      {
        s += " ";
      }
      first = false;
      s += "x" + std::to_string( lit.var + 1 ) + ":" + ( lit.input ? "1" : "0" );
    }
  }
  s += "] b=";
  s += spec.output_constant() ? "1" : "0";
  return s;
}

std::string to_string( const Profile& p )
{
  std::string s;
  for ( auto k : p.ks )
  {
    if ( !s.empty() )
    {
      s += ",";
    }
    s += std::to_string( k );
  }
  return s;
}

std::string to_string( const InputWord& x )
{
  std::string s;
  for ( unsigned i = 0; i < x.num_vars(); ++i )
  {
    s += x[i] ? '1' : '0';
  }
  return s;
}

std::string mask_to_string( VarMask m )
{
  std::string s = "{";
  bool first = true;
  for ( auto v : mask_to_indices( m ) )
  {
    if ( !first )
    {
      s += ",";
    }
    first = false;
    s += std::to_string( v + 1 );
  }
  return s + "}";
}

} // namespace ncfkit
