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

#include "revsyn/half_v.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "revsyn/bits.hpp"
#include "revsyn/io.hpp"

namespace revsyn
{

half_v_circuit::half_v_circuit( uint32_t num_lines, std::vector<control_function> functions )
    : num_lines_( num_lines ), functions_( std::move( functions ) )
{
  if ( num_lines_ == 0 || num_lines_ > max_vars )
  {
    throw error( errc::unsupported_n,
                 "half-V circuit needs between 1 and " + std::to_string( max_vars ) + " lines" );
  }
  if ( functions_.size() > num_lines_ )
  {
    throw error( errc::arity_mismatch, "more gates than lines" );
  }
  for ( auto const& g : functions_ )
  {
    if ( g.arity() != num_lines_ - 1 )
    {
      throw error( errc::arity_mismatch, "every control function must have arity k - 1" );
    }
  }
}

circuit to_circuit( half_v_circuit const& h )
{
  circuit c( h.num_lines() );
  for ( uint32_t i = 1; i <= h.num_gates(); ++i )
  {
    std::vector<uint32_t> controls;
    for ( uint32_t l = 1; l <= h.num_lines(); ++l )
    {
      if ( l != i )
      {
        controls.push_back( l );
      }
    }
    c.add_gate( single_target_gate( i, std::move( controls ), h.functions()[i - 1] ) );
  }
  return c;
}

uint64_t enumerate_half_v( uint32_t num_gates, uint32_t num_lines )
{
  if ( num_lines == 0 || num_gates > num_lines )
  {
    throw error( errc::arity_mismatch, "need 1 <= n <= k" );
  }
  if ( num_lines - 1 > 5 )
  {
    throw error( errc::unsupported_size, "control-function space too large to enumerate" );
  }
  uint64_t const functions_per_gate = uint64_t{ 1 } << ( 1u << ( num_lines - 1 ) );
  uint64_t total = 1;
  for ( uint32_t i = 0; i < num_gates; ++i )
  {
    if ( total > ( uint64_t{ 1 } << 22 ) / functions_per_gate )
    {
      throw error( errc::unsupported_size, "tuple space too large to enumerate" );
    }
    total *= functions_per_gate;
  }

  uint32_t const states = 1u << num_lines;
  std::set<std::vector<uint32_t>> distinct;
  for ( uint64_t code = 0; code < total; ++code )
  {
    std::vector<control_function> gs;
    gs.reserve( num_gates );
    uint64_t c = code;
    for ( uint32_t i = 0; i < num_gates; ++i, c /= functions_per_gate )
    {
      uint64_t const value = c % functions_per_gate;
      std::vector<uint8_t> bits( 1u << ( num_lines - 1 ) );
      for ( uint32_t b = 0; b < bits.size(); ++b )
      {
        bits[b] = static_cast<uint8_t>( ( value >> b ) & 1u );
      }
      gs.emplace_back( num_lines - 1, std::move( bits ) );
    }
    auto const circ = to_circuit( half_v_circuit( num_lines, std::move( gs ) ) );
    std::vector<uint32_t> map( states );
    for ( uint32_t s = 0; s < states; ++s )
    {
      map[s] = simulate( circ, s );
    }
    distinct.insert( std::move( map ) );
  }
  return distinct.size();
}

recognize_result recognize_half_v( permutation const& p, uint32_t num_gates )
{
  uint32_t const k = p.num_lines();
  if ( num_gates > k )
  {
    throw error( errc::arity_mismatch, "need n <= k" );
  }

  std::vector<control_function> gs;
  gs.reserve( num_gates );
  constexpr uint8_t unset = 2;

  for ( uint32_t i = 1; i <= num_gates; ++i )
  {
    std::vector<uint8_t> table( 1u << ( k - 1 ), unset );
    std::vector<uint32_t> first_input( 1u << ( k - 1 ), 0 );
    for ( uint32_t x = 0; x < p.size(); ++x )
    {
      /* Before gate i fires, lines 1..i-1 hold outputs and lines i..k still
       * hold inputs; its control pattern mixes both accordingly. */
      uint32_t pattern = 0;
      for ( uint32_t l = 1; l <= k; ++l )
      {
        if ( l == i )
        {
          continue;
        }
        uint32_t const bit = l < i ? line_bit( p[x], k, l ) : line_bit( x, k, l );
        pattern = ( pattern << 1 ) | bit;
      }
      uint8_t const h = static_cast<uint8_t>( line_bit( p[x], k, i ) ^ line_bit( x, k, i ) );
      if ( table[pattern] == unset )
      {
        table[pattern] = h;
        first_input[pattern] = x;
      }
      else if ( table[pattern] != h )
      {
        return recognize_result{ std::nullopt, fiber_witness{ i, first_input[pattern], x } };
      }
    }
    gs.emplace_back( k - 1, std::move( table ) );
  }

  for ( uint32_t l = num_gates + 1; l <= k; ++l )
  {
    for ( uint32_t x = 0; x < p.size(); ++x )
    {
      if ( line_bit( p[x], k, l ) != line_bit( x, k, l ) )
      {
        return recognize_result{ std::nullopt, fiber_witness{ l, x, x } };
      }
    }
  }

  return recognize_result{ half_v_circuit( k, std::move( gs ) ), std::nullopt };
}

half_v_circuit encode( truth_table const& f, uint32_t num_lines )
{
  if ( f.num_inputs() + 1 != num_lines || f.num_outputs() > num_lines )
  {
    throw error( errc::arity_mismatch,
                 "embedding a function with k-1 inputs and n <= k outputs needs matching k" );
  }
  uint32_t const n = f.num_outputs();
  std::vector<control_function> gs;
  gs.reserve( n );
  for ( uint32_t i = 1; i <= n; ++i )
  {
    std::vector<uint8_t> bits( f.num_rows() );
    for ( uint32_t r = 0; r < bits.size(); ++r )
    {
      bits[r] = static_cast<uint8_t>( f.output_bit( r, i ) );
    }
    gs.emplace_back( num_lines - 1, std::move( bits ) );
  }
  return half_v_circuit( num_lines, std::move( gs ) );
}

truth_table decode( half_v_circuit const& h )
{
  uint32_t const n = h.num_gates();
  if ( n == 0 )
  {
    throw error( errc::arity_mismatch, "nothing to decode from a gate-free circuit" );
  }
  std::vector<uint32_t> rows( 1u << ( h.num_lines() - 1 ), 0u );
  for ( uint32_t r = 0; r < rows.size(); ++r )
  {
    uint32_t word = 0;
    for ( uint32_t i = 0; i < n; ++i )
    {
      word = ( word << 1 ) | h.functions()[i].bits()[r];
    }
    rows[r] = word;
  }
  return truth_table( h.num_lines() - 1, n, std::move( rows ) );
}

void write_half_v( std::ostream& out, half_v_circuit const& h )
{
  out << "# halfv n=" << h.num_gates() << " k=" << h.num_lines() << "\n";
  write_circuit( out, to_circuit( h ) );
}

std::string to_rc_string( half_v_circuit const& h )
{
  std::ostringstream stream;
  write_half_v( stream, h );
  return stream.str();
}

void write_half_v_file( std::string const& path, half_v_circuit const& h )
{
  std::ofstream stream( path );
  if ( !stream )
  {
    throw std::runtime_error( "cannot open '" + path + "' for writing" );
  }
  write_half_v( stream, h );
}

half_v_circuit read_half_v( std::string_view text )
{
  /* The "# halfv n=<n> k=<k>" header carries the gate count, which the gate
   * list alone cannot (constant-0 gates are not serialized). */
  uint32_t num_gates = 0, num_lines = 0;
  bool header_found = false;
  {
    std::istringstream stream{ std::string( text ) };
    std::string line;
    while ( std::getline( stream, line ) )
    {
      unsigned n = 0, k = 0;
      if ( std::sscanf( line.c_str(), "# halfv n=%u k=%u", &n, &k ) == 2 )
      {
        num_gates = n;
        num_lines = k;
        header_found = true;
        break;
      }
    }
  }
  if ( !header_found )
  {
    throw error( errc::syntax_error, "missing '# halfv n=<n> k=<k>' header" );
  }

  auto const c = read_circuit( text );
  if ( c.num_lines() != num_lines )
  {
    throw error( errc::size_mismatch, "header and .lines disagree" );
  }
  if ( num_gates > num_lines )
  {
    throw error( errc::arity_mismatch, "header claims more gates than lines" );
  }

  std::vector<control_function> gs( num_gates, control_function::constant( num_lines - 1, false ) );
  uint32_t previous_target = 0;
  for ( auto const& g : c.gates() )
  {
    auto const* stg = std::get_if<single_target_gate>( &g );
    if ( stg == nullptr || stg->target > num_gates || stg->target <= previous_target ||
         stg->controls.size() != num_lines - 1 )
    {
      throw error( errc::syntax_error, "not a half-V-shaped circuit" );
    }
    previous_target = stg->target;
    gs[stg->target - 1] = stg->function;
  }
  return half_v_circuit( num_lines, std::move( gs ) );
}

half_v_circuit read_half_v( std::istream& in )
{
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_half_v( std::string_view{ buffer.str() } );
}

half_v_circuit read_half_v_file( std::string const& path )
{
  std::ifstream stream( path );
  if ( !stream )
  {
    throw std::runtime_error( "cannot open '" + path + "' for reading" );
  }
  return read_half_v( stream );
}

} // namespace revsyn
