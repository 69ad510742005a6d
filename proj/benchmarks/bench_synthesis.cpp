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

#include <revsyn/enumeration.hpp>
#include <revsyn/synthesis.hpp>

using namespace revsyn;

static void BM_YoungSubgroupSynthesis( benchmark::State& state )
{
  auto const n = static_cast<uint32_t>( state.range( 0 ) );
  uint64_t seed = 0;
  for ( auto _ : state )
  {
    auto const f = random_permutation( n, seed++ );
    benchmark::DoNotOptimize( young_subgroup_synthesis( f ) );
  }
  state.SetItemsProcessed( state.iterations() );
}
BENCHMARK( BM_YoungSubgroupSynthesis )->DenseRange( 3, 10 );

static void BM_DecomposeOnce( benchmark::State& state )
{
  auto const n = static_cast<uint32_t>( state.range( 0 ) );
  auto const f = random_permutation( n, 1 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( decompose( f, 1 ) );
  }
}
BENCHMARK( BM_DecomposeOnce )->DenseRange( 4, 12 )->RangeMultiplier( 2 );

static void BM_SynthesizeToffoli( benchmark::State& state )
{
  auto const n = static_cast<uint32_t>( state.range( 0 ) );
  uint64_t seed = 0;
  for ( auto _ : state )
  {
    auto const f = random_permutation( n, seed++ );
    benchmark::DoNotOptimize( synthesize_toffoli( f, esop_method::pprm ) );
  }
}
BENCHMARK( BM_SynthesizeToffoli )->DenseRange( 3, 8 );

static void BM_ExactSearch( benchmark::State& state )
{
  auto const n = static_cast<uint32_t>( state.range( 0 ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( bfs_optimal_sizes( n, gate_library::mct ) );
  }
}
BENCHMARK( BM_ExactSearch )->DenseRange( 2, 3 );

BENCHMARK_MAIN();
