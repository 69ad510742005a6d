/* revsyn: reversible logic synthesis and circuit complexity workbench
 * Copyright (C) 2026 The revsyn authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

#include "revsyn/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "revsyn/bits.hpp"
#include "revsyn/esop.hpp"

namespace revsyn
{

namespace
{

struct content_line
{
  uint32_t number; /* 1-based line in the source */
  std::string text;
};

/* Strips '#' comments, trims, and drops blank lines. */
std::vector<content_line> content_lines( std::istream& in )
{
  std::vector<content_line> lines;
  std::string raw;
  uint32_t number = 0;
  while ( std::getline( in, raw ) )
  {
    ++number;
    if ( auto const hash = raw.find( '#' ); hash != std::string::npos )
    {
      raw.erase( hash );
    }
    auto const begin = raw.find_first_not_of( " \t\r" );
    if ( begin == std::string::npos )
    {
      continue;
    }
    auto const end = raw.find_last_not_of( " \t\r" );
    lines.push_back( { number, raw.substr( begin, end - begin + 1 ) } );
  }
  return lines;
}

std::vector<std::string> tokens_of( std::string const& text )
{
  std::istringstream stream( text );
  std::vector<std::string> tokens;
  std::string token;
  while ( stream >> token )
  {
    tokens.push_back( token );
  }
  return tokens;
}

uint32_t parse_uint( std::string const& token, uint32_t line )
{
  if ( token.empty() || !std::all_of( token.begin(), token.end(), []( char ch ) { return ch >= '0' && ch <= '9'; } ) )
  {
    throw parse_error( errc::syntax_error, line, "expected a number, got '" + token + "'" );
  }
  uint64_t value = 0;
  for ( auto const ch : token )
  {
    value = value * 10 + ( ch - '0' );
    if ( value > 1000000 )
    {
      throw parse_error( errc::syntax_error, line, "number too large" );
    }
  }
  return static_cast<uint32_t>( value );
}

/* "xK" or "!xK" */
std::pair<uint32_t, bool> parse_line_literal( std::string const& token, uint32_t line )
{
  std::string body = token;
  bool positive = true;
  if ( !body.empty() && body[0] == '!' )
  {
    positive = false;
    body.erase( 0, 1 );
  }
  if ( body.size() < 2 || body[0] != 'x' )
  {
    throw parse_error( errc::syntax_error, line, "expected a line literal, got '" + token + "'" );
  }
  return { parse_uint( body.substr( 1 ), line ), positive };
}

void check_line_index( uint32_t index, uint32_t num_lines, uint32_t line )
{
  if ( index == 0 || index > num_lines )
  {
    throw parse_error( errc::line_index_out_of_range, line,
                       "line x" + std::to_string( index ) + " out of range on a " +
                           std::to_string( num_lines ) + "-line circuit" );
  }
}

} // namespace

truth_table read_truth_table( std::istream& in )
{
  auto const lines = content_lines( in );
  if ( lines.size() < 2 )
  {
    throw parse_error( errc::syntax_error, lines.empty() ? 1 : lines.back().number, "missing .i/.o header" );
  }

  auto const header = [&]( std::size_t idx, std::string const& key ) {
    auto const toks = tokens_of( lines[idx].text );
    if ( toks.size() != 2 || toks[0] != key )
    {
      throw parse_error( errc::syntax_error, lines[idx].number, "expected '" + key + " N'" );
    }
    return parse_uint( toks[1], lines[idx].number );
  };
  uint32_t const num_inputs = header( 0, ".i" );
  uint32_t const num_outputs = header( 1, ".o" );
  if ( num_inputs > max_vars || num_outputs == 0 || num_outputs > max_vars )
  {
    throw parse_error( errc::unsupported_n, lines[0].number, "arity out of supported range" );
  }

  std::size_t const expected = std::size_t{ 1 } << num_inputs;
  if ( lines.size() - 2 != expected )
  {
    throw parse_error( errc::length_mismatch, lines.back().number,
                       "expected " + std::to_string( expected ) + " data lines, got " +
                           std::to_string( lines.size() - 2 ) );
  }

  std::vector<uint32_t> rows( expected );
  for ( std::size_t r = 0; r < expected; ++r )
  {
    auto const& [number, text] = lines[2 + r];
    if ( text.size() != num_outputs )
    {
      throw parse_error( errc::length_mismatch, number,
                         "expected " + std::to_string( num_outputs ) + " output digits" );
    }
    uint32_t word = 0;
    for ( auto const ch : text )
    {
      if ( ch != '0' && ch != '1' )
      {
        throw parse_error( errc::syntax_error, number, "output digits must be 0 or 1" );
      }
      word = ( word << 1 ) | ( ch == '1' ? 1u : 0u );
    }
    rows[r] = word;
  }
  return truth_table( num_inputs, num_outputs, std::move( rows ) );
}

truth_table read_truth_table( std::string_view text )
{
  std::istringstream stream{ std::string( text ) };
  return read_truth_table( stream );
}

truth_table read_truth_table_file( std::string const& path )
{
  std::ifstream stream( path );
  if ( !stream )
  {
    throw std::runtime_error( "cannot open '" + path + "' for reading" );
  }
  return read_truth_table( stream );
}

void write_truth_table( std::ostream& out, truth_table const& f )
{
  out << ".i " << f.num_inputs() << "\n.o " << f.num_outputs() << "\n";
  for ( uint32_t r = 0; r < f.num_rows(); ++r )
  {
    for ( uint32_t i = 1; i <= f.num_outputs(); ++i )
    {
      out << f.output_bit( r, i );
    }
    out << "\n";
  }
}

std::string to_tt_string( truth_table const& f )
{
  std::ostringstream stream;
  write_truth_table( stream, f );
  return stream.str();
}

void write_truth_table_file( std::string const& path, truth_table const& f )
{
  std::ofstream stream( path );
  if ( !stream )
  {
    throw std::runtime_error( "cannot open '" + path + "' for writing" );
  }
  write_truth_table( stream, f );
}

namespace
{

mpmct_gate parse_toffoli_line( std::vector<std::string> const& toks, uint32_t num_lines, uint32_t line )
{
  if ( toks.size() < 2 )
  {
    throw parse_error( errc::syntax_error, line, "Toffoli gate needs a target" );
  }
  auto const [target, target_positive] = parse_line_literal( toks.back(), line );
  if ( !target_positive )
  {
    throw parse_error( errc::syntax_error, line, "target must be a plain line literal" );
  }
  check_line_index( target, num_lines, line );
  std::vector<uint32_t> positive, negative;
  for ( std::size_t i = 1; i + 1 < toks.size(); ++i )
  {
    auto const [index, is_positive] = parse_line_literal( toks[i], line );
    check_line_index( index, num_lines, line );
    ( is_positive ? positive : negative ).push_back( index );
  }
  try
  {
    return mpmct_gate( target, std::move( positive ), std::move( negative ) );
  }
  catch ( error const& e )
  {
    throw parse_error( e.code(), line, e.what() );
  }
}

single_target_gate parse_stg_line( std::string const& text, uint32_t num_lines, uint32_t line )
{
  auto const colon = text.find( ':' );
  if ( colon == std::string::npos )
  {
    throw parse_error( errc::syntax_error, line, "single-target gate needs ': <expression>'" );
  }
  auto const head = tokens_of( text.substr( 0, colon ) );
  if ( head.size() != 2 || head[0] != "stg" )
  {
    throw parse_error( errc::syntax_error, line, "expected 'stg <target> : <expression>'" );
  }
  uint32_t const target = parse_uint( head[1], line );
  check_line_index( target, num_lines, line );

  std::string body = text.substr( colon + 1 );
  std::vector<uint32_t> with_lines;
  if ( auto const with_pos = body.find( "with" ); with_pos != std::string::npos )
  {
    std::string const with_part = body.substr( with_pos + 4 );
    body.erase( with_pos );
    std::istringstream with_stream( with_part );
    std::string item;
    while ( std::getline( with_stream, item, ',' ) )
    {
      auto const toks = tokens_of( item );
      if ( toks.size() != 1 )
      {
        throw parse_error( errc::syntax_error, line, "malformed with-list" );
      }
      auto const [index, positive] = parse_line_literal( toks[0], line );
      if ( !positive )
      {
        throw parse_error( errc::syntax_error, line, "with-list entries are plain line literals" );
      }
      check_line_index( index, num_lines, line );
      with_lines.push_back( index );
    }
    if ( with_lines.empty() )
    {
      throw parse_error( errc::syntax_error, line, "empty with-list" );
    }
  }

  std::vector<raw_cube> cubes;
  try
  {
    cubes = parse_esop_cubes( body );
  }
  catch ( error const& e )
  {
    throw parse_error( e.code(), line, e.what() );
  }

  std::set<uint32_t> mentioned;
  for ( auto const& c : cubes )
  {
    std::set<uint32_t> in_cube;
    for ( auto const& lit : c )
    {
      check_line_index( lit.index, num_lines, line );
      if ( !in_cube.insert( lit.index ).second )
      {
        throw parse_error( errc::duplicate_control, line,
                           "line x" + std::to_string( lit.index ) + " repeated in a cube" );
      }
      mentioned.insert( lit.index );
    }
  }

  std::set<uint32_t> controls = mentioned;
  for ( auto const index : with_lines )
  {
    if ( !controls.insert( index ).second )
    {
      throw parse_error( errc::duplicate_control, line,
                         "line x" + std::to_string( index ) + " listed twice" );
    }
  }
  if ( controls.count( target ) )
  {
    throw parse_error( errc::duplicate_control, line, "target cannot be a control" );
  }

  std::vector<uint32_t> control_list( controls.begin(), controls.end() );
  uint32_t const k = static_cast<uint32_t>( control_list.size() );

  /* position of each control line within the function's assignment index */
  auto const value_of = [&]( uint32_t assignment, uint32_t index ) {
    auto const it = std::lower_bound( control_list.begin(), control_list.end(), index );
    auto const j = static_cast<uint32_t>( it - control_list.begin() );
    return ( assignment >> ( k - 1 - j ) ) & 1u;
  };

  std::vector<uint8_t> bits( std::size_t{ 1 } << k, 0u );
  for ( uint32_t assignment = 0; assignment < bits.size(); ++assignment )
  {
    bool value = false;
    for ( auto const& c : cubes )
    {
      bool fires = true;
      for ( auto const& lit : c )
      {
        if ( value_of( assignment, lit.index ) != ( lit.positive ? 1u : 0u ) )
        {
          fires = false;
          break;
        }
      }
      value ^= fires;
    }
    bits[assignment] = value ? 1u : 0u;
  }

  return single_target_gate( target, std::move( control_list ), control_function( k, std::move( bits ) ) );
}

} // namespace

circuit read_circuit( std::istream& in )
{
  auto const lines = content_lines( in );
  if ( lines.empty() )
  {
    throw parse_error( errc::syntax_error, 1, "missing .lines header" );
  }
  auto const head = tokens_of( lines[0].text );
  if ( head.size() != 2 || head[0] != ".lines" )
  {
    throw parse_error( errc::syntax_error, lines[0].number, "expected '.lines N'" );
  }
  uint32_t const num_lines = parse_uint( head[1], lines[0].number );
  if ( num_lines == 0 || num_lines > max_vars )
  {
    throw parse_error( errc::unsupported_n, lines[0].number, "line count out of supported range" );
  }

  circuit result( num_lines );
  for ( std::size_t i = 1; i < lines.size(); ++i )
  {
    auto const& [number, text] = lines[i];
    auto const toks = tokens_of( text );
    if ( toks[0] == "t" )
    {
      result.add_gate( parse_toffoli_line( toks, num_lines, number ) );
    }
    else if ( toks[0] == "stg" )
    {
      result.add_gate( parse_stg_line( text, num_lines, number ) );
    }
    else
    {
      throw parse_error( errc::syntax_error, number, "unknown gate '" + toks[0] + "'" );
    }
  }
  return result;
}

circuit read_circuit( std::string_view text )
{
  std::istringstream stream{ std::string( text ) };
  return read_circuit( stream );
}

circuit read_circuit_file( std::string const& path )
{
  std::ifstream stream( path );
  if ( !stream )
  {
    throw std::runtime_error( "cannot open '" + path + "' for reading" );
  }
  return read_circuit( stream );
}

namespace
{

void write_toffoli_line( std::ostream& out, mpmct_gate const& g )
{
  out << "t";
  auto pos = g.positive.begin();
  auto neg = g.negative.begin();
  while ( pos != g.positive.end() || neg != g.negative.end() )
  {
    if ( neg == g.negative.end() || ( pos != g.positive.end() && *pos < *neg ) )
    {
      out << " x" << *pos++;
    }
    else
    {
      out << " !x" << *neg++;
    }
  }
  out << " x" << g.target << "\n";
}

void write_stg_line( std::ostream& out, single_target_gate const& g )
{
  auto const expr = pprm( g.function.to_truth_table() );
  uint32_t const k = g.function.arity();

  out << "stg " << g.target << " : ";
  std::set<uint32_t> mentioned;
  bool first_cube = true;
  for ( auto const& c : expr.cubes )
  {
    if ( !first_cube )
    {
      out << " ^ ";
    }
    first_cube = false;
    if ( c.care == 0 )
    {
      out << "1";
      continue;
    }
    bool first_literal = true;
    for ( uint32_t var = 1; var <= k; ++var )
    {
      uint32_t const mask = 1u << bit_position( k, var );
      if ( !( c.care & mask ) )
      {
        continue;
      }
      if ( !first_literal )
      {
        out << "&";
      }
      first_literal = false;
      out << "x" << g.controls[var - 1];
      mentioned.insert( g.controls[var - 1] );
    }
  }

  bool first_with = true;
  for ( auto const line : g.controls )
  {
    if ( mentioned.count( line ) )
    {
      continue;
    }
    out << ( first_with ? " with x" : ",x" ) << line;
    first_with = false;
  }
  out << "\n";
}

} // namespace

void write_circuit( std::ostream& out, circuit const& c )
{
  out << ".lines " << c.num_lines() << "\n";
  for ( auto const& g : c.gates() )
  {
    if ( auto const* stg = std::get_if<single_target_gate>( &g ) )
    {
      if ( stg->function.is_constant_zero() )
      {
        continue; /* identity gate */
      }
      write_stg_line( out, *stg );
    }
    else
    {
      write_toffoli_line( out, std::get<mpmct_gate>( g ) );
    }
  }
}

std::string to_rc_string( circuit const& c )
{
  std::ostringstream stream;
  write_circuit( stream, c );
  return stream.str();
}

void write_circuit_file( std::string const& path, circuit const& c )
{
  std::ofstream stream( path );
  if ( !stream )
  {
    throw std::runtime_error( "cannot open '" + path + "' for writing" );
  }
  write_circuit( stream, c );
}

} // namespace revsyn
