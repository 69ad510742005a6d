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

#include "revsyn/enumeration.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "revsyn/bits.hpp"

namespace revsyn
{

namespace
{

permutation gate_permutation( uint32_t n, uint32_t target, uint32_t pos_mask, uint32_t neg_mask )
{
  std::vector<uint32_t> map( 1u << n );
  uint32_t const target_mask = 1u << bit_position( n, target );
  for ( uint32_t s = 0; s < map.size(); ++s )
  {
    bool const fires = ( s & pos_mask ) == pos_mask && ( s & neg_mask ) == 0;
    map[s] = fires ? s ^ target_mask : s;
  }
  return permutation( n, std::move( map ) );
}

} // namespace

std::vector<permutation> one_gate_permutations( uint32_t n, gate_library library )
{
  std::set<std::vector<uint32_t>> distinct;
  for ( uint32_t target = 1; target <= n; ++target )
  {
    std::vector<uint32_t> rest;
    for ( uint32_t l = 1; l <= n; ++l )
    {
      if ( l != target )
      {
        rest.push_back( l );
      }
    }
    if ( library == gate_library::mct )
    {
      for ( uint32_t subset = 0; subset < ( 1u << ( n - 1 ) ); ++subset )
      {
        uint32_t pos_mask = 0;
        for ( uint32_t i = 0; i < rest.size(); ++i )
        {
          if ( ( subset >> i ) & 1u )
          {
            pos_mask |= 1u << bit_position( n, rest[i] );
          }
        }
        distinct.insert( gate_permutation( n, target, pos_mask, 0 ).map() );
      }
    }
    else
    {
      /* each non-target line is absent, positive, or negative */
      uint64_t combos = 1;
      for ( uint32_t i = 0; i < rest.size(); ++i )
      {
        combos *= 3;
      }
      for ( uint64_t code = 0; code < combos; ++code )
      {
        uint32_t pos_mask = 0, neg_mask = 0;
        uint64_t c = code;
        for ( uint32_t i = 0; i < rest.size(); ++i, c /= 3 )
        {
          uint32_t const mask = 1u << bit_position( n, rest[i] );
          switch ( c % 3 )
          {
          case 1: pos_mask |= mask; break;
          case 2: neg_mask |= mask; break;
          default: break;
          }
        }
        distinct.insert( gate_permutation( n, target, pos_mask, neg_mask ).map() );
      }
    }
  }

  std::vector<permutation> result;
  result.reserve( distinct.size() );
  for ( auto& map : distinct )
  {
    result.emplace_back( n, map );
  }
  return result;
}

uint64_t count_one_gate_functions( uint32_t n )
{
  if ( n == 0 || n > 6 )
  {
    throw error( errc::unsupported_n, "one-gate enumeration supported for 1 <= n <= 6" );
  }
  return one_gate_permutations( n, gate_library::mct ).size();
}

namespace
{

uint64_t factorial( uint32_t m )
{
  uint64_t f = 1;
  for ( uint32_t i = 2; i <= m; ++i )
  {
    f *= i;
  }
  return f;
}

uint64_t lehmer_rank( std::vector<uint32_t> const& map )
{
  uint64_t result = 0;
  auto const m = static_cast<uint32_t>( map.size() );
  for ( uint32_t i = 0; i < m; ++i )
  {
    uint32_t smaller = 0;
    for ( uint32_t j = i + 1; j < m; ++j )
    {
      if ( map[j] < map[i] )
      {
        ++smaller;
      }
    }
    result = result * ( m - i ) + smaller;
  }
  return result;
}

} // namespace

bfs_result bfs_optimal_sizes( uint32_t n, gate_library library )
{
  if ( n == 0 || n > 3 )
  {
    throw error( errc::unsupported_n, "exact search supported for 1 <= n <= 3" );
  }

  auto const generators = one_gate_permutations( n, library );
  uint32_t const states = 1u << n;
  uint64_t const total = factorial( states );

  std::vector<int8_t> dist( total, -1 );
  std::vector<std::vector<uint32_t>> frontier;

  permutation const ident( n );
  dist[lehmer_rank( ident.map() )] = 0;
  frontier.push_back( ident.map() );

  bfs_result result{ n, library, 0, { 1 } };
  int8_t depth = 0;
  std::vector<uint32_t> image( states );
  while ( !frontier.empty() )
  {
    ++depth;
    std::vector<std::vector<uint32_t>> next;
    for ( auto const& current : frontier )
    {
      for ( auto const& g : generators )
      {
        for ( uint32_t s = 0; s < states; ++s )
        {
          image[s] = g[current[s]];
        }
        auto const r = lehmer_rank( image );
        if ( dist[r] < 0 )
        {
          dist[r] = depth;
          next.push_back( image );
        }
      }
    }
    if ( !next.empty() )
    {
      result.histogram.push_back( next.size() );
      result.worst_case = depth;
    }
    frontier = std::move( next );
  }
  return result;
}

} // namespace revsyn
