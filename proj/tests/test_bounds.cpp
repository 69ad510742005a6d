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

#include <revsyn/bounds.hpp>

using namespace revsyn;

/* Expected values fixed with an independent big-integer sweep: the least k
 * with (n 2^(n-1))^k >= (2^n)!. */
static constexpr uint64_t expected_bound[] = {
    0, 0, 3, 5, 9, 19, 40, 82, 169, 347, 712, 1455, 2966, 6031, 12242 };

TEST_CASE( "small bounds by exact integer comparison" )
{
  CHECK( lower_bound_toffoli( 2 ) == bound_report{ 2, 3, true } );  /* 4^2 = 16 < 24 <= 4^3 */
  CHECK( lower_bound_toffoli( 3 ) == bound_report{ 3, 5, true } );  /* 12^4 < 40320 <= 12^5 */
  for ( uint32_t n = 2; n <= 10; ++n )
  {
    auto const report = lower_bound_toffoli( n );
    CHECK( report.exact );
    CHECK( report.lower_bound == expected_bound[n] );
  }
}

TEST_CASE( "interval mode reproduces the exact values" )
{
  for ( uint32_t n = 2; n <= 14; ++n )
  {
    auto const report = lower_bound_toffoli( n, bound_mode::interval );
    CHECK( !report.exact );
    CHECK( report.lower_bound == expected_bound[n] );
  }
}

TEST_CASE( "automatic mode switches to intervals beyond n = 10" )
{
  CHECK( lower_bound_toffoli( 10 ).exact );
  auto const big = lower_bound_toffoli( 11 );
  CHECK( !big.exact );
  CHECK( big.lower_bound == expected_bound[11] );

  /* the interval value is monotone in n and well-defined up to the cap */
  uint64_t previous = 0;
  for ( uint32_t n = 2; n <= 20; ++n )
  {
    auto const report = lower_bound_toffoli( n );
    CHECK( report.lower_bound > previous );
    previous = report.lower_bound;
  }
}

TEST_CASE( "degenerate and rejected inputs" )
{
  CHECK( lower_bound_toffoli( 1 ) == bound_report{ 1, 1, true } );
  try
  {
    lower_bound_toffoli( 1, bound_mode::automatic, false );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::unsupported_n );
  }
  try
  {
    lower_bound_toffoli( 0 );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::unsupported_n );
  }
  try
  {
    lower_bound_toffoli( 21 );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::unsupported_n );
  }
  try
  {
    lower_bound_toffoli( 11, bound_mode::exact );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::unsupported_n );
  }
}

TEST_CASE( "the induction inequality holds over the whole supported range" )
{
  for ( uint32_t n = 1; n <= 20; ++n )
  {
    CHECK( check_induction_inequality( n ) );
  }
  try
  {
    check_induction_inequality( 0 );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::unsupported_n );
  }
}
