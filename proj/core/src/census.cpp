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

#include "revsyn/census.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "revsyn/circuit.hpp"
#include "revsyn/esop.hpp"
#include "revsyn/synthesis.hpp"

namespace revsyn
{

complexity_profile classify( permutation const& f )
{
  complexity_profile profile;
  auto const c = young_subgroup_synthesis( f );
  profile.stg_count = static_cast<uint32_t>( c.num_gates() );
  for ( auto const& g : c.gates() )
  {
    auto const& stg = std::get<single_target_gate>( g );
    auto const table = stg.function.to_truth_table();
    auto const pprm_count = static_cast<uint32_t>( term_count( pprm( table ) ) );
    auto const esop_count = static_cast<uint32_t>( term_count( esop_davio( table, esop_policy::make_greedy() ) ) );
    profile.pprm_terms.push_back( pprm_count );
    profile.esop_terms.push_back( esop_count );
    profile.toffoli_count_pprm += pprm_count;
    profile.toffoli_count_esop += esop_count;
  }
  return profile;
}

namespace
{

uint64_t splitmix64( uint64_t x )
{
  x += 0x9e3779b97f4a7c15ull;
  x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebull;
  return x ^ ( x >> 31 );
}

struct accumulator
{
  std::map<uint32_t, uint64_t> stg;
  std::map<uint32_t, uint64_t> max_pprm;
  std::map<uint32_t, uint64_t> max_esop;
  std::map<uint64_t, uint64_t> toffoli_pprm;
  std::map<uint64_t, uint64_t> toffoli_esop;

  void add( complexity_profile const& p )
  {
    auto const max_of = []( std::vector<uint32_t> const& v ) {
      return v.empty() ? 0u : *std::max_element( v.begin(), v.end() );
    };
    ++stg[p.stg_count];
    ++max_pprm[max_of( p.pprm_terms )];
    ++max_esop[max_of( p.esop_terms )];
    ++toffoli_pprm[p.toffoli_count_pprm];
    ++toffoli_esop[p.toffoli_count_esop];
  }

  void merge( accumulator const& other )
  {
    auto const merge_map = []( auto& into, auto const& from ) {
      for ( auto const& [key, count] : from )
      {
        into[key] += count;
      }
    };
    merge_map( stg, other.stg );
    merge_map( max_pprm, other.max_pprm );
    merge_map( max_esop, other.max_esop );
    merge_map( toffoli_pprm, other.toffoli_pprm );
    merge_map( toffoli_esop, other.toffoli_esop );
  }
};

} // namespace

census_result census( uint32_t n, census_options const& options )
{
  if ( options.exhaustive && n > 3 )
  {
    throw error( errc::unsupported_n, "exhaustive census supported for n <= 3" );
  }

  uint64_t count;
  if ( options.exhaustive )
  {
    count = 1;
    for ( uint32_t i = 2; i <= ( 1u << n ); ++i )
    {
      count *= i;
    }
  }
  else
  {
    count = options.samples;
  }

  /* Work item i is derived from its index alone, so the aggregate is
   * independent of the thread partition. */
  auto const function_at = [&]( uint64_t index ) {
    return options.exhaustive ? permutation_from_rank( n, index )
                              : random_permutation( n, splitmix64( options.seed ^ index ) );
  };

  uint32_t const workers = std::max( 1u, options.threads );
  std::vector<accumulator> partial( workers );
  auto const work = [&]( uint32_t worker ) {
    for ( uint64_t index = worker; index < count; index += workers )
    {
      partial[worker].add( classify( function_at( index ) ) );
    }
  };

  if ( workers == 1 )
  {
    work( 0 );
  }
  else
  {
    std::vector<std::thread> pool;
    pool.reserve( workers );
    for ( uint32_t w = 0; w < workers; ++w )
    {
      pool.emplace_back( work, w );
    }
    for ( auto& t : pool )
    {
      t.join();
    }
  }

  accumulator total;
  for ( auto const& p : partial )
  {
    total.merge( p );
  }

  census_result result;
  result.n = n;
  result.exhaustive = options.exhaustive;
  result.function_count = count;
  result.stg_count_histogram = std::move( total.stg );
  result.max_pprm_terms_histogram = std::move( total.max_pprm );
  result.max_esop_terms_histogram = std::move( total.max_esop );
  result.toffoli_pprm_histogram = std::move( total.toffoli_pprm );
  result.toffoli_esop_histogram = std::move( total.toffoli_esop );
  return result;
}

} // namespace revsyn
