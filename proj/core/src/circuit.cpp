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

#include "revsyn/circuit.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "revsyn/bits.hpp"
#include "revsyn/esop.hpp"

namespace revsyn
{

namespace
{

void check_sorted_unique( std::vector<uint32_t>& lines )
{
  std::sort( lines.begin(), lines.end() );
  if ( std::adjacent_find( lines.begin(), lines.end() ) != lines.end() )
  {
    throw error( errc::duplicate_control, "control line listed twice" );
  }
}

} // namespace

single_target_gate::single_target_gate( uint32_t t, std::vector<uint32_t> c, control_function fn )
    : target( t ), controls( std::move( c ) ), function( std::move( fn ) )
{
  if ( target == 0 )
  {
    throw error( errc::line_index_out_of_range, "line indices start at 1" );
  }
  check_sorted_unique( controls );
  if ( std::binary_search( controls.begin(), controls.end(), target ) )
  {
    throw error( errc::duplicate_control, "target cannot be a control" );
  }
  if ( function.arity() != controls.size() )
  {
    throw error( errc::arity_mismatch,
                 "control function arity " + std::to_string( function.arity() ) +
                     " does not match " + std::to_string( controls.size() ) + " controls" );
  }
}

mpmct_gate::mpmct_gate( uint32_t t, std::vector<uint32_t> pos, std::vector<uint32_t> neg )
    : target( t ), positive( std::move( pos ) ), negative( std::move( neg ) )
{
  if ( target == 0 )
  {
    throw error( errc::line_index_out_of_range, "line indices start at 1" );
  }
  check_sorted_unique( positive );
  check_sorted_unique( negative );
  for ( auto const l : negative )
  {
    if ( std::binary_search( positive.begin(), positive.end(), l ) )
    {
      throw error( errc::duplicate_control, "line " + std::to_string( l ) + " is both a positive and a negative control" );
    }
  }
  if ( std::binary_search( positive.begin(), positive.end(), target ) ||
       std::binary_search( negative.begin(), negative.end(), target ) )
  {
    throw error( errc::duplicate_control, "target cannot be a control" );
  }
}

uint32_t max_line( gate const& g )
{
  return std::visit( []( auto const& gate_ ) {
    uint32_t m = gate_.target;
    if constexpr ( std::is_same_v<std::decay_t<decltype( gate_ )>, single_target_gate> )
    {
      for ( auto const l : gate_.controls )
      {
        m = std::max( m, l );
      }
    }
    else
    {
      for ( auto const l : gate_.positive )
      {
        m = std::max( m, l );
      }
      for ( auto const l : gate_.negative )
      {
        m = std::max( m, l );
      }
    }
    return m;
  }, g );
}

uint32_t apply_gate( single_target_gate const& g, uint32_t state, uint32_t num_lines )
{
  uint32_t assignment = 0;
  for ( auto const c : g.controls )
  {
    assignment = ( assignment << 1 ) | line_bit( state, num_lines, c );
  }
  return g.function.evaluate( assignment ) ? flip_line( state, num_lines, g.target ) : state;
}

uint32_t apply_gate( mpmct_gate const& g, uint32_t state, uint32_t num_lines )
{
  for ( auto const l : g.positive )
  {
    if ( !line_bit( state, num_lines, l ) )
    {
      return state;
    }
  }
  for ( auto const l : g.negative )
  {
    if ( line_bit( state, num_lines, l ) )
    {
      return state;
    }
  }
  return flip_line( state, num_lines, g.target );
}

uint32_t apply_gate( gate const& g, uint32_t state, uint32_t num_lines )
{
  return std::visit( [&]( auto const& gate_ ) { return apply_gate( gate_, state, num_lines ); }, g );
}

circuit::circuit( uint32_t num_lines )
    : num_lines_( num_lines )
{
  if ( num_lines_ == 0 || num_lines_ > max_vars )
  {
    throw error( errc::unsupported_n, "circuit needs between 1 and " + std::to_string( max_vars ) + " lines" );
  }
}

circuit::circuit( uint32_t num_lines, std::vector<gate> gates )
    : circuit( num_lines )
{
  for ( auto& g : gates )
  {
    add_gate( std::move( g ) );
  }
}

void circuit::add_gate( gate g )
{
  if ( max_line( g ) > num_lines_ )
  {
    throw error( errc::line_index_out_of_range,
                 "gate references line " + std::to_string( max_line( g ) ) + " on a " +
                     std::to_string( num_lines_ ) + "-line circuit" );
  }
  gates_.push_back( std::move( g ) );
}

uint32_t simulate( circuit const& c, uint32_t input )
{
  if ( input >= ( 1u << c.num_lines() ) )
  {
    throw error( errc::index_out_of_range, "input state out of range" );
  }
  uint32_t state = input;
  for ( auto const& g : c.gates() )
  {
    state = apply_gate( g, state, c.num_lines() );
  }
  return state;
}

permutation circuit_to_permutation( circuit const& c )
{
  std::vector<uint32_t> map( 1u << c.num_lines() );
  for ( uint32_t s = 0; s < map.size(); ++s )
  {
    map[s] = simulate( c, s );
  }
  return permutation( c.num_lines(), std::move( map ) );
}

circuit invert( circuit const& c )
{
  std::vector<gate> gates( c.gates().rbegin(), c.gates().rend() );
  return circuit( c.num_lines(), std::move( gates ) );
}

std::vector<mpmct_gate> map_to_toffoli( single_target_gate const& g, esop_method method )
{
  auto const expr = method == esop_method::pprm
                        ? pprm( g.function.to_truth_table() )
                        : esop_davio( g.function.to_truth_table(), esop_policy::make_greedy() );

  uint32_t const k = g.function.arity();
  std::vector<mpmct_gate> cascade;
  cascade.reserve( expr.cubes.size() );
  for ( auto const& c : expr.cubes )
  {
    std::vector<uint32_t> positive, negative;
    for ( uint32_t var = 1; var <= k; ++var )
    {
      uint32_t const mask = 1u << bit_position( k, var );
      if ( !( c.care & mask ) )
      {
        continue;
      }
      auto const line = g.controls[var - 1];
      if ( c.polarity & mask )
      {
        positive.push_back( line );
      }
      else
      {
        negative.push_back( line );
      }
    }
    cascade.emplace_back( g.target, std::move( positive ), std::move( negative ) );
  }
  return cascade;
}

circuit map_to_toffoli( circuit const& c, esop_method method )
{
  circuit result( c.num_lines() );
  for ( auto const& g : c.gates() )
  {
    if ( auto const* stg = std::get_if<single_target_gate>( &g ) )
    {
      for ( auto& t : map_to_toffoli( *stg, method ) )
      {
        result.add_gate( std::move( t ) );
      }
    }
    else
    {
      result.add_gate( g );
    }
  }
  return result;
}

} // namespace revsyn
