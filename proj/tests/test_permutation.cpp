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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <revsyn/permutation.hpp>

using namespace revsyn;

TEST_CASE( "identity and bijection validation" )
{
  permutation const id( 2 );
  CHECK( id.is_identity() );
  CHECK( id.map() == std::vector<uint32_t>{ 0, 1, 2, 3 } );

  try
  {
    permutation( 1, { 0, 0 } );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::not_reversible );
  }
}

TEST_CASE( "truth table conversions" )
{
  /* the swap of two lines exchanges the 01 and 10 patterns */
  truth_table const swap_tt( 2, 2, { 0, 2, 1, 3 } );
  auto const p = permutation::from_truth_table( swap_tt );
  CHECK( p.map() == std::vector<uint32_t>{ 0, 2, 1, 3 } );
  CHECK( p.to_truth_table() == swap_tt );

  try
  {
    permutation::from_truth_table( truth_table( 2, 1, { 0, 0, 0, 1 } ) );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::not_reversible );
  }

  for ( uint64_t seed = 0; seed < 100; ++seed )
  {
    auto const q = random_permutation( 4, seed );
    CHECK( permutation::from_truth_table( q.to_truth_table() ) == q );
  }
}

TEST_CASE( "composition and inversion" )
{
  permutation const swap( 2, { 0, 2, 1, 3 } );
  CHECK( compose( swap, permutation( 2 ) ) == swap );
  CHECK( compose( swap, swap ).is_identity() );

  for ( uint64_t seed = 0; seed < 50; ++seed )
  {
    auto const p = random_permutation( 3, seed );
    auto const q = random_permutation( 3, seed + 1000 );
    auto const r = random_permutation( 3, seed + 2000 );
    CHECK( compose( p, invert( p ) ).is_identity() );
    CHECK( compose( invert( p ), p ).is_identity() );
    CHECK( invert( invert( p ) ) == p );
    CHECK( compose( compose( p, q ), r ) == compose( p, compose( q, r ) ) );
  }

  /* q applies first */
  permutation const cycle( 1, { 1, 0 } );
  CHECK( compose( swap, swap )[1] == swap[swap[1]] );
  CHECK( cycle[0] == 1 );

  try
  {
    compose( swap, cycle );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::size_mismatch );
  }
}

TEST_CASE( "random permutations are deterministic per seed" )
{
  CHECK( random_permutation( 5, 42 ) == random_permutation( 5, 42 ) );
  CHECK( random_permutation( 5, 42 ) != random_permutation( 5, 43 ) );
}

TEST_CASE( "rank and unrank are mutually inverse" )
{
  for ( uint64_t r = 0; r < 24; ++r )
  {
    CHECK( rank( permutation_from_rank( 1, r % 2 ) ) == r % 2 );
    CHECK( rank( permutation_from_rank( 2, r ) ) == r );
  }
  for ( uint64_t seed = 0; seed < 50; ++seed )
  {
    auto const p = random_permutation( 3, seed );
    CHECK( permutation_from_rank( 3, rank( p ) ) == p );
  }
  CHECK( permutation_from_rank( 2, 0 ).is_identity() );
}
