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

#include "revsyn/synthesis.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "revsyn/bits.hpp"

namespace revsyn
{

namespace
{

/* Flips bit `pos` of every state whose rest pattern satisfies g. */
uint32_t apply_target_flip( control_function const& g, uint32_t state, uint32_t pos )
{
  return g.evaluate( remove_bit( state, pos ) ) ? state ^ ( 1u << pos ) : state;
}

std::vector<uint32_t> other_lines( uint32_t num_lines, uint32_t var )
{
  std::vector<uint32_t> lines;
  lines.reserve( num_lines - 1 );
  for ( uint32_t l = 1; l <= num_lines; ++l )
  {
    if ( l != var )
    {
      lines.push_back( l );
    }
  }
  return lines;
}

} // namespace

decomposition_step decompose( permutation const& f, uint32_t var )
{
  uint32_t const n = f.num_lines();
  if ( var == 0 || var > n )
  {
    throw error( errc::bad_variable, "variable " + std::to_string( var ) + " out of range" );
  }
  uint32_t const pos = bit_position( n, var );
  uint32_t const pairs = 1u << ( n - 1 );

  /* The two rows mapping into each output pair, in ascending row order. */
  constexpr uint32_t none = ~0u;
  std::vector<std::array<uint32_t, 2>> out_rows( pairs, { none, none } );
  for ( uint32_t row = 0; row < f.size(); ++row )
  {
    auto& slot = out_rows[remove_bit( f[row], pos )];
    slot[slot[0] == none ? 0 : 1] = row;
  }

  /* Each row is one edge between its input pair and its output pair; every
   * pair has degree 2, so the components are even cycles.  Walk each cycle
   * from its lowest input pair, starting on the var = 0 edge, and hand out
   * alternating labels. */
  std::vector<uint8_t> label( f.size(), 0 );
  std::vector<bool> visited( f.size(), false );
  for ( uint32_t r = 0; r < pairs; ++r )
  {
    uint32_t const start = insert_bit( r, pos, 0 );
    if ( visited[start] )
    {
      continue;
    }
    uint32_t edge = start;
    uint8_t lab = 0;
    while ( true )
    {
      label[edge] = lab;
      visited[edge] = true;
      auto const& slot = out_rows[remove_bit( f[edge], pos )];
      edge = slot[0] == edge ? slot[1] : slot[0];
      lab ^= 1;
      label[edge] = lab;
      visited[edge] = true;
      uint32_t const rest = remove_bit( edge, pos );
      uint32_t const next = insert_bit( rest, pos, ( ( edge >> pos ) & 1u ) ^ 1u );
      if ( next == start )
      {
        break;
      }
      edge = next;
      lab ^= 1;
    }
  }

  std::vector<uint8_t> g1_bits( pairs ), g2_bits( pairs );
  for ( uint32_t r = 0; r < pairs; ++r )
  {
    g1_bits[r] = label[insert_bit( r, pos, 0 )];
  }
  for ( uint32_t row = 0; row < f.size(); ++row )
  {
    uint32_t const image = f[row];
    if ( ( ( image >> pos ) & 1u ) == 0 )
    {
      g2_bits[remove_bit( image, pos )] = label[row];
    }
  }

  control_function g1( n - 1, std::move( g1_bits ) );
  control_function g2( n - 1, std::move( g2_bits ) );

  std::vector<uint32_t> inner_map( f.size() );
  for ( uint32_t s = 0; s < f.size(); ++s )
  {
    inner_map[s] = apply_target_flip( g2, f[apply_target_flip( g1, s, pos )], pos );
  }

  return decomposition_step{ var, std::move( g1 ), std::move( g2 ),
                             permutation( n, std::move( inner_map ) ) };
}

circuit young_subgroup_synthesis( permutation const& f )
{
  std::vector<uint32_t> order( f.num_lines() );
  for ( uint32_t i = 0; i < order.size(); ++i )
  {
    order[i] = i + 1;
  }
  return young_subgroup_synthesis( f, order );
}

circuit young_subgroup_synthesis( permutation const& f, std::vector<uint32_t> const& order )
{
  uint32_t const n = f.num_lines();
  {
    auto sorted = order;
    std::sort( sorted.begin(), sorted.end() );
    if ( sorted.size() != n )
    {
      throw error( errc::bad_variable, "order must be a permutation of 1..n" );
    }
    for ( uint32_t i = 0; i < n; ++i )
    {
      if ( sorted[i] != i + 1 )
      {
        throw error( errc::bad_variable, "order must be a permutation of 1..n" );
      }
    }
  }

  std::vector<std::pair<uint32_t, control_function>> front, back;
  permutation residual = f;
  for ( uint32_t i = 0; i < n; ++i )
  {
    uint32_t const var = order[i];
    auto step = decompose( residual, var );
    residual = std::move( step.inner );
    if ( i + 1 == n )
    {
      /* The residual is the identity here, so the two innermost gates share
       * the target and combine into one. */
      auto merged = exclusive_or( step.g1, step.g2 );
      if ( !merged.is_constant_zero() )
      {
        front.emplace_back( var, std::move( merged ) );
      }
    }
    else
    {
      if ( !step.g1.is_constant_zero() )
      {
        front.emplace_back( var, std::move( step.g1 ) );
      }
      if ( !step.g2.is_constant_zero() )
      {
        back.emplace_back( var, std::move( step.g2 ) );
      }
    }
  }
  if ( !residual.is_identity() )
  {
    throw std::logic_error( "decomposition did not terminate in the identity" );
  }

  circuit result( n );
  for ( auto& [var, g] : front )
  {
    result.add_gate( single_target_gate( var, other_lines( n, var ), std::move( g ) ) );
  }
  for ( auto it = back.rbegin(); it != back.rend(); ++it )
  {
    result.add_gate( single_target_gate( it->first, other_lines( n, it->first ), std::move( it->second ) ) );
  }
  return result;
}

circuit synthesize_toffoli( permutation const& f, esop_method method )
{
  return map_to_toffoli( young_subgroup_synthesis( f ), method );
}

circuit synthesize_toffoli( permutation const& f, std::vector<uint32_t> const& order, esop_method method )
{
  return map_to_toffoli( young_subgroup_synthesis( f, order ), method );
}

} // namespace revsyn
