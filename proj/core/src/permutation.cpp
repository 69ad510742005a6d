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

#include "revsyn/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "revsyn/bits.hpp"

namespace revsyn
{

namespace
{

/* Uniform draw from [0, bound) by rejection; std::mt19937_64 is fully
 * specified, so results are identical across platforms. */
uint64_t bounded( std::mt19937_64& rng, uint64_t bound )
{
  uint64_t const limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t r;
  do
  {
    r = rng();
  } while ( r >= limit );
  return r % bound;
}

} // namespace

permutation::permutation( uint32_t num_lines )
    : num_lines_( num_lines ), map_( std::size_t{ 1 } << num_lines )
{
  if ( num_lines_ == 0 || num_lines_ > max_vars )
  {
    throw error( errc::unsupported_n, "permutation needs between 1 and " + std::to_string( max_vars ) + " lines" );
  }
  std::iota( map_.begin(), map_.end(), 0u );
}

permutation::permutation( uint32_t num_lines, std::vector<uint32_t> map )
    : num_lines_( num_lines ), map_( std::move( map ) )
{
  if ( num_lines_ == 0 || num_lines_ > max_vars )
  {
    throw error( errc::unsupported_n, "permutation needs between 1 and " + std::to_string( max_vars ) + " lines" );
  }
  if ( map_.size() != ( std::size_t{ 1 } << num_lines_ ) )
  {
    throw error( errc::length_mismatch,
                 "expected " + std::to_string( 1u << num_lines_ ) + " entries, got " + std::to_string( map_.size() ) );
  }
  std::vector<bool> seen( map_.size(), false );
  for ( auto const v : map_ )
  {
    if ( v >= map_.size() || seen[v] )
    {
      throw error( errc::not_reversible, "map is not a bijection" );
    }
    seen[v] = true;
  }
}

permutation permutation::from_truth_table( truth_table const& f )
{
  if ( !is_reversible( f ) )
  {
    throw error( errc::not_reversible, "truth table is not reversible" );
  }
  return permutation( f.num_inputs(), f.rows() );
}

truth_table permutation::to_truth_table() const
{
  return truth_table( num_lines_, num_lines_, map_ );
}

bool permutation::is_identity() const
{
  for ( uint32_t i = 0; i < map_.size(); ++i )
  {
    if ( map_[i] != i )
    {
      return false;
    }
  }
  return true;
}

permutation compose( permutation const& p, permutation const& q )
{
  if ( p.num_lines() != q.num_lines() )
  {
    throw error( errc::size_mismatch, "composing permutations on different line counts" );
  }
  std::vector<uint32_t> map( p.size() );
  for ( uint32_t r = 0; r < map.size(); ++r )
  {
    map[r] = p[q[r]];
  }
  return permutation( p.num_lines(), std::move( map ) );
}

permutation invert( permutation const& p )
{
  std::vector<uint32_t> map( p.size() );
  for ( uint32_t r = 0; r < map.size(); ++r )
  {
    map[p[r]] = r;
  }
  return permutation( p.num_lines(), std::move( map ) );
}

permutation random_permutation( uint32_t num_lines, uint64_t seed )
{
  permutation p( num_lines );
  std::vector<uint32_t> map = p.map();
  std::mt19937_64 rng( seed );
  for ( uint32_t i = static_cast<uint32_t>( map.size() ) - 1; i > 0; --i )
  {
    auto const j = static_cast<uint32_t>( bounded( rng, i + 1 ) );
    std::swap( map[i], map[j] );
  }
  return permutation( num_lines, std::move( map ) );
}

uint64_t rank( permutation const& p )
{
  if ( p.num_lines() > 4 )
  {
    throw error( errc::unsupported_n, "ranking supported up to 4 lines" );
  }
  uint32_t const m = p.size();
  uint64_t result = 0;
  for ( uint32_t i = 0; i < m; ++i )
  {
    uint32_t smaller = 0;
    for ( uint32_t j = i + 1; j < m; ++j )
    {
      if ( p[j] < p[i] )
      {
        ++smaller;
      }
    }
    result = result * ( m - i ) + smaller;
  }
  return result;
}

permutation permutation_from_rank( uint32_t num_lines, uint64_t rank )
{
  if ( num_lines > 4 )
  {
    throw error( errc::unsupported_n, "unranking supported up to 4 lines" );
  }
  uint32_t const m = 1u << num_lines;
  std::vector<uint32_t> digits( m, 0 );
  for ( uint32_t i = m; i-- > 0; )
  {
    digits[i] = static_cast<uint32_t>( rank % ( m - i ) );
    rank /= ( m - i );
  }
  if ( rank != 0 )
  {
    throw error( errc::index_out_of_range, "rank out of range" );
  }
  std::vector<uint32_t> pool( m );
  std::iota( pool.begin(), pool.end(), 0u );
  std::vector<uint32_t> map( m );
  for ( uint32_t i = 0; i < m; ++i )
  {
    map[i] = pool[digits[i]];
    pool.erase( pool.begin() + digits[i] );
  }
  return permutation( num_lines, std::move( map ) );
}

} // namespace revsyn
