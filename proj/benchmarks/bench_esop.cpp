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

#include <benchmark/benchmark.h>

#include <random>

#include <revsyn/bounds.hpp>
#include <revsyn/esop.hpp>

using namespace revsyn;

namespace
{

truth_table random_function( uint32_t num_vars, uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::vector<uint32_t> rows( 1u << num_vars );
  for ( auto& r : rows )
  {
    r = static_cast<uint32_t>( rng() & 1u );
  }
  return truth_table( num_vars, 1, std::move( rows ) );
}

} // namespace

static void BM_Pprm( benchmark::State& state )
{
  auto const f = random_function( static_cast<uint32_t>( state.range( 0 ) ), 5 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( pprm( f ) );
  }
}
BENCHMARK( BM_Pprm )->DenseRange( 4, 16 )->RangeMultiplier( 2 );

static void BM_GreedyEsop( benchmark::State& state )
{
  auto const f = random_function( static_cast<uint32_t>( state.range( 0 ) ), 5 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( esop_davio( f, esop_policy::make_greedy() ) );
  }
}
BENCHMARK( BM_GreedyEsop )->DenseRange( 4, 10 );

static void BM_ExactBound( benchmark::State& state )
{
  auto const n = static_cast<uint32_t>( state.range( 0 ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( lower_bound_toffoli( n, bound_mode::exact ) );
  }
}
BENCHMARK( BM_ExactBound )->DenseRange( 4, 10, 2 );

static void BM_IntervalBound( benchmark::State& state )
{
  auto const n = static_cast<uint32_t>( state.range( 0 ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( lower_bound_toffoli( n, bound_mode::interval ) );
  }
}
BENCHMARK( BM_IntervalBound )->DenseRange( 4, 20, 4 );

BENCHMARK_MAIN();
