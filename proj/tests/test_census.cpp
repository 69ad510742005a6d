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

#include <revsyn/census.hpp>
#include <revsyn/circuit.hpp>

using namespace revsyn;

TEST_CASE( "profiles of fixed functions" )
{
  auto const id_profile = classify( permutation( 3 ) );
  CHECK( id_profile.stg_count == 0 );
  CHECK( id_profile.toffoli_count_pprm == 0 );
  CHECK( id_profile.toffoli_count_esop == 0 );

  /* the permutation of one Toffoli gate costs one single-product gate */
  circuit toffoli( 3 );
  toffoli.add_gate( mpmct_gate( 3, { 1, 2 } ) );
  auto const profile = classify( circuit_to_permutation( toffoli ) );
  CHECK( profile.stg_count == 1 );
  CHECK( profile.pprm_terms == std::vector<uint32_t>{ 1 } );
  CHECK( profile.toffoli_count_pprm == 1 );

  auto const swap_profile = classify( permutation( 2, { 0, 2, 1, 3 } ) );
  CHECK( swap_profile.stg_count == 3 );
  CHECK( swap_profile.toffoli_count_pprm == 3 );
}

TEST_CASE( "exhaustive censuses at small sizes" )
{
  census_options options;
  options.exhaustive = true;

  auto const tiny = census( 1, options );
  CHECK( tiny.function_count == 2 );
  CHECK( tiny.stg_count_histogram == std::map<uint32_t, uint64_t>{ { 0, 1 }, { 1, 1 } } );

  auto const small = census( 2, options );
  CHECK( small.function_count == 24 );
  uint64_t total = 0;
  for ( auto const& [gates, count] : small.stg_count_histogram )
  {
    CHECK( gates <= 3 );
    total += count;
  }
  CHECK( total == 24 );

  auto const full = census( 3, options );
  CHECK( full.function_count == 40320 );
  for ( auto const& [gates, count] : full.stg_count_histogram )
  {
    CHECK( gates <= 5 );
  }
  /* a 2-variable control function has at most 4 product terms */
  for ( auto const& [terms, count] : full.max_pprm_terms_histogram )
  {
    CHECK( terms <= 4 );
  }
  for ( auto const& [terms, count] : full.max_esop_terms_histogram )
  {
    CHECK( terms <= 4 );
  }

  try
  {
    census( 4, options );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::unsupported_n );
  }
}

TEST_CASE( "sampled censuses are deterministic and thread-invariant" )
{
  census_options options;
  options.samples = 300;
  options.seed = 17;

  auto const once = census( 4, options );
  auto const twice = census( 4, options );
  CHECK( once.stg_count_histogram == twice.stg_count_histogram );
  CHECK( once.toffoli_pprm_histogram == twice.toffoli_pprm_histogram );

  options.threads = 4;
  auto const parallel = census( 4, options );
  CHECK( parallel.stg_count_histogram == once.stg_count_histogram );
  CHECK( parallel.max_pprm_terms_histogram == once.max_pprm_terms_histogram );
  CHECK( parallel.max_esop_terms_histogram == once.max_esop_terms_histogram );
  CHECK( parallel.toffoli_pprm_histogram == once.toffoli_pprm_histogram );
  CHECK( parallel.toffoli_esop_histogram == once.toffoli_esop_histogram );

  for ( auto const& [gates, count] : once.stg_count_histogram )
  {
    CHECK( gates <= 7 );
  }
}
