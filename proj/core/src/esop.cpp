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

#include "revsyn/esop.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "revsyn/bits.hpp"

namespace revsyn
{

bool evaluate( esop_expr const& expr, uint32_t assignment )
{
  if ( assignment >= ( 1u << expr.num_vars ) )
  {
    throw error( errc::index_out_of_range, "assignment out of range" );
  }
  bool value = false;
  for ( auto const& c : expr.cubes )
  {
    value ^= c.matches( assignment );
  }
  return value;
}

std::pair<truth_table, truth_table> expand_shannon( truth_table const& f, uint32_t var )
{
  return { cofactor( f, var, 0 ), cofactor( f, var, 1 ) };
}

std::pair<truth_table, truth_table> expand_davio_positive( truth_table const& f, uint32_t var )
{
  auto f0 = cofactor( f, var, 0 );
  auto diff = exclusive_or( f0, cofactor( f, var, 1 ) );
  return { std::move( f0 ), std::move( diff ) };
}

std::pair<truth_table, truth_table> expand_davio_negative( truth_table const& f, uint32_t var )
{
  auto f1 = cofactor( f, var, 1 );
  auto diff = exclusive_or( cofactor( f, var, 0 ), f1 );
  return { std::move( f1 ), std::move( diff ) };
}

namespace
{

void require_single_output( truth_table const& f )
{
  if ( f.num_outputs() != 1 )
  {
    throw error( errc::arity_mismatch, "expected a single-output function" );
  }
}

} // namespace

esop_expr pprm( truth_table const& f )
{
  require_single_output( f );
  std::vector<uint32_t> coeff = f.rows();
  for ( uint32_t step = 1; step < coeff.size(); step <<= 1 )
  {
    for ( uint32_t x = 0; x < coeff.size(); ++x )
    {
      if ( x & step )
      {
        coeff[x] ^= coeff[x ^ step];
      }
    }
  }
  esop_expr expr{ f.num_inputs(), {} };
  for ( uint32_t m = 0; m < coeff.size(); ++m )
  {
    if ( coeff[m] )
    {
      expr.cubes.push_back( cube{ m, m } );
    }
  }
  return expr;
}

namespace
{

using value_vector = std::vector<uint8_t>;

struct davio_context
{
  esop_policy policy;
  std::map<value_vector, std::vector<cube>> memo;
};

bool all_zero( value_vector const& v )
{
  return std::all_of( v.begin(), v.end(), []( uint8_t b ) { return b == 0; } );
}

/* Appends child cubes augmented with a literal for the split variable, which
 * owns bit position (num_vars - 1) of the current subfunction. */
void append_with_literal( std::vector<cube>& out, std::vector<cube> const& cubes,
                          uint32_t position, bool positive )
{
  for ( auto c : cubes )
  {
    c.care |= 1u << position;
    if ( positive )
    {
      c.polarity |= 1u << position;
    }
    out.push_back( c );
  }
}

std::vector<cube> davio_rec( value_vector const& bits, uint32_t num_vars, davio_context& ctx )
{
  if ( all_zero( bits ) )
  {
    return {};
  }
  if ( num_vars == 0 )
  {
    return { cube{ 0, 0 } };
  }
  if ( auto const it = ctx.memo.find( bits ); it != ctx.memo.end() )
  {
    return it->second;
  }

  uint32_t const half = 1u << ( num_vars - 1 );
  value_vector f0( bits.begin(), bits.begin() + half );
  value_vector f1( bits.begin() + half, bits.end() );
  value_vector diff( half );
  for ( uint32_t i = 0; i < half; ++i )
  {
    diff[i] = f0[i] ^ f1[i];
  }

  uint32_t const position = num_vars - 1;
  std::vector<cube> result;

  bool positive_davio = true;
  switch ( ctx.policy.which )
  {
  case esop_policy::kind::pprm:
    positive_davio = true;
    break;
  case esop_policy::kind::fixed:
    positive_davio = ( ctx.policy.positive_mask >> position ) & 1u;
    break;
  case esop_policy::kind::greedy:
  {
    auto const c0 = davio_rec( f0, num_vars - 1, ctx );
    auto const c1 = davio_rec( f1, num_vars - 1, ctx );
    auto const cd = davio_rec( diff, num_vars - 1, ctx );
    auto const n_pd = c0.size() + cd.size();
    auto const n_nd = c1.size() + cd.size();
    auto const n_sh = c0.size() + c1.size();
    if ( n_pd <= n_nd && n_pd <= n_sh )
    {
      result = c0;
      append_with_literal( result, cd, position, true );
    }
    else if ( n_nd <= n_sh )
    {
      result = c1;
      append_with_literal( result, cd, position, false );
    }
    else
    {
      append_with_literal( result, c0, position, false );
      append_with_literal( result, c1, position, true );
    }
    ctx.memo.emplace( bits, result );
    return result;
  }
  }

  if ( positive_davio )
  {
    result = davio_rec( f0, num_vars - 1, ctx );
    append_with_literal( result, davio_rec( diff, num_vars - 1, ctx ), position, true );
  }
  else
  {
    result = davio_rec( f1, num_vars - 1, ctx );
    append_with_literal( result, davio_rec( diff, num_vars - 1, ctx ), position, false );
  }
  ctx.memo.emplace( bits, result );
  return result;
}

void sort_cubes( std::vector<cube>& cubes )
{
  std::sort( cubes.begin(), cubes.end(), []( cube const& a, cube const& b ) {
    return a.care != b.care ? a.care < b.care : a.polarity < b.polarity;
  } );
}

} // namespace

esop_expr esop_davio( truth_table const& f, esop_policy const& policy )
{
  require_single_output( f );
  value_vector bits( f.num_rows() );
  for ( uint32_t r = 0; r < bits.size(); ++r )
  {
    bits[r] = static_cast<uint8_t>( f.rows()[r] & 1u );
  }
  davio_context ctx{ policy, {} };
  esop_expr expr{ f.num_inputs(), davio_rec( bits, f.num_inputs(), ctx ) };
  sort_cubes( expr.cubes );
  return expr;
}

namespace
{

void skip_spaces( std::string_view text, std::size_t& pos )
{
  while ( pos < text.size() && std::isspace( static_cast<unsigned char>( text[pos] ) ) )
  {
    ++pos;
  }
}

uint32_t parse_index( std::string_view text, std::size_t& pos )
{
  if ( pos >= text.size() || !std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
  {
    throw error( errc::syntax_error, "expected variable index" );
  }
  uint64_t value = 0;
  while ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
  {
    value = value * 10 + ( text[pos] - '0' );
    if ( value > max_vars )
    {
      throw error( errc::line_index_out_of_range, "variable index too large" );
    }
    ++pos;
  }
  if ( value == 0 )
  {
    throw error( errc::line_index_out_of_range, "variable indices start at 1" );
  }
  return static_cast<uint32_t>( value );
}

} // namespace

std::vector<raw_cube> parse_esop_cubes( std::string_view text )
{
  std::vector<raw_cube> cubes;
  std::size_t pos = 0;
  skip_spaces( text, pos );
  if ( pos >= text.size() )
  {
    throw error( errc::syntax_error, "empty expression" );
  }
  while ( true )
  {
    raw_cube current;
    bool constant_one = false;
    while ( true )
    {
      skip_spaces( text, pos );
      if ( pos < text.size() && text[pos] == '1' )
      {
        if ( constant_one || !current.empty() )
        {
          throw error( errc::syntax_error, "constant term cannot carry literals" );
        }
        ++pos;
        constant_one = true;
      }
      else
      {
        bool positive = true;
        if ( pos < text.size() && text[pos] == '!' )
        {
          positive = false;
          ++pos;
        }
        if ( pos >= text.size() || text[pos] != 'x' )
        {
          throw error( errc::syntax_error, "expected literal" );
        }
        ++pos;
        if ( constant_one )
        {
          throw error( errc::syntax_error, "constant term cannot carry literals" );
        }
        current.push_back( raw_literal{ parse_index( text, pos ), positive } );
      }
      skip_spaces( text, pos );
      if ( pos < text.size() && text[pos] == '&' )
      {
        ++pos;
        continue;
      }
      break;
    }
    cubes.push_back( std::move( current ) );
    skip_spaces( text, pos );
    if ( pos >= text.size() )
    {
      break;
    }
    if ( text[pos] != '^' )
    {
      throw error( errc::syntax_error, std::string( "unexpected character '" ) + text[pos] + "'" );
    }
    ++pos;
  }
  return cubes;
}

esop_expr parse_esop( std::string_view text, uint32_t num_vars )
{
  auto const raw = parse_esop_cubes( text );
  esop_expr expr{ num_vars, {} };
  for ( auto const& rc : raw )
  {
    cube c;
    for ( auto const& lit : rc )
    {
      if ( lit.index > num_vars )
      {
        throw error( errc::line_index_out_of_range,
                           "variable x" + std::to_string( lit.index ) + " out of range" );
      }
      uint32_t const mask = 1u << bit_position( num_vars, lit.index );
      if ( c.care & mask )
      {
        throw error( errc::duplicate_control,
                           "variable x" + std::to_string( lit.index ) + " repeated in cube" );
      }
      c.care |= mask;
      if ( lit.positive )
      {
        c.polarity |= mask;
      }
    }
    expr.cubes.push_back( c );
  }
  return expr;
}

std::string to_string( cube const& c, uint32_t num_vars )
{
  if ( c.care == 0 )
  {
    return "1";
  }
  std::string out;
  for ( uint32_t var = 1; var <= num_vars; ++var )
  {
    uint32_t const mask = 1u << bit_position( num_vars, var );
    if ( !( c.care & mask ) )
    {
      continue;
    }
    if ( !out.empty() )
    {
      out += '&';
    }
    if ( !( c.polarity & mask ) )
    {
      out += '!';
    }
    out += 'x';
    out += std::to_string( var );
  }
  return out;
}

std::string to_string( esop_expr const& expr )
{
  auto cubes = expr.cubes;
  sort_cubes( cubes );
  std::string out;
  for ( auto const& c : cubes )
  {
    if ( !out.empty() )
    {
      out += " ^ ";
    }
    out += to_string( c, expr.num_vars );
  }
  return out;
}

} // namespace revsyn
