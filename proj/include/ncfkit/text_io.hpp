#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "common.hpp"
#include "ncf.hpp"
#include "truth_table.hpp"

/*! \file text_io.hpp
  \brief Text formats for functions, specs and profiles

  - table:  binary string of length 2^n, character j is f(word(j)) where
            x_{i+1} is bit i of j. "0001" is x1*x2.
  - hex:    "0x" followed by the table read as the integer sum_j f(j) 2^j,
            most significant nibble first, zero-padded to 2^n bits (n >= 2).
  - anf:    terms joined by '+', each "1" or x<i> factors joined by '*',
            e.g. "x1*x3 + x2 + 1"; "0" is the zero polynomial.
  - layers: "[x1:0 x2:0 | x3:1] b=0", pipes separate layers, each token is
            x<i>:<canalyzing input>.

  Parsers throw ParseError naming the offending token and its offset.
*/

namespace ncfkit
{

enum class InputFormat
{
  automatic,
  table,
  hex,
  anf,
  layers
};

InputFormat parse_format_name( std::string_view name );
const char* to_string( InputFormat format );

/// Picks hex for "0x..", layers for "[..", table for digit strings of length >= 2, otherwise anf.
InputFormat detect_format( std::string_view text );

TruthTable parse_table( std::string_view text, const Limits& limits = {} );
TruthTable parse_hex( std::string_view text, const Limits& limits = {} );

/// `n` defaults to the largest variable index used (at least 1).
AnfPolynomial parse_anf( std::string_view text, std::optional<unsigned> n = std::nullopt, const Limits& limits = {} );
NcfLayerSpec parse_layers( std::string_view text, const Limits& limits = {} );

/// "1,1,2" or "[1,1,2]".
Profile parse_profile( std::string_view text );

struct ParsedFunction
{
  InputFormat format;
  TruthTable table;
  /// Present when the input was given in layers format.
  std::optional<NcfLayerSpec> spec;
};

ParsedFunction parse_function( std::string_view text, InputFormat format = InputFormat::automatic,
                               std::optional<unsigned> anf_vars = std::nullopt, const Limits& limits = {} );

std::string to_table_string( const TruthTable& f );
std::string to_hex_string( const TruthTable& f );
std::string to_string( const AnfPolynomial& p );
std::string to_string( const NcfLayerSpec& spec );
std::string to_string( const Profile& p );

/// x_1 first: InputWord{1, 0} prints as "10".
std::string to_string( const InputWord& x );

/// 1-based indices, e.g. "{1,3}".
std::string mask_to_string( VarMask m );

} // namespace ncfkit
