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

#include <random>

#include <revsyn/bits.hpp>
#include <revsyn/circuit.hpp>
#include <revsyn/esop.hpp>

using namespace revsyn;

namespace
{

single_target_gate random_stg( uint32_t num_lines, std::mt19937_64& rng )
{
  uint32_t const target = 1 + static_cast<uint32_t>( rng() % num_lines );
  std::vector<uint32_t> controls;
  for ( uint32_t l = 1; l <= num_lines; ++l )
  {
    if ( l != target && ( rng() & 1u ) )
    {
      controls.push_back( l );
    }
  }
  auto const arity = static_cast<uint32_t>( controls.size() );
  std::vector<uint8_t> bits( 1u << arity );
  for ( auto& b : bits )
  {
    b = static_cast<uint8_t>( rng() & 1u );
  }
  return single_target_gate( target, std::move( controls ), control_function( arity, std::move( bits ) ) );
}

mpmct_gate random_mpmct( uint32_t num_lines, std::mt19937_64& rng )
{
  uint32_t const target = 1 + static_cast<uint32_t>( rng() % num_lines );
  std::vector<uint32_t> positive, negative;
  for ( uint32_t l = 1; l <= num_lines; ++l )
  {
    if ( l == target )
    {
      continue;
    }
    switch ( rng() % 3 )
    {
    case 1: positive.push_back( l ); break;
    case 2: negative.push_back( l ); break;
    default: break;
    }
  }
  return mpmct_gate( target, std::move( positive ), std::move( negative ) );
}

gate random_gate( uint32_t num_lines, std::mt19937_64& rng )
{
  if ( rng() & 1u )
  {
    return random_stg( num_lines, rng );
  }
  return random_mpmct( num_lines, rng );
}

} // namespace

TEST_CASE( "gate construction validates its lines" )
{
  try
  {
    mpmct_gate( 3, { 1, 2 }, { 2 } );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::duplicate_control );
  }
  try
  {
    single_target_gate( 1, { 1, 2 }, control_function::constant( 2, true ) );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::duplicate_control );
  }
  try
  {
    single_target_gate( 1, { 2, 3 }, control_function::constant( 1, true ) );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::arity_mismatch );
  }
}

TEST_CASE( "gate application on fixed examples" )
{
  /* classic Toffoli on (1,1,0) fires */
  mpmct_gate const toffoli( 3, { 1, 2 } );
  CHECK( apply_gate( toffoli, 0b110, 3 ) == 0b111 );
  CHECK( apply_gate( toffoli, 0b100, 3 ) == 0b100 );

  /* mixed polarity: fires on x1 = 1, x2 = 0 */
  mpmct_gate const mixed( 3, { 1 }, { 2 } );
  CHECK( apply_gate( mixed, 0b100, 3 ) == 0b101 );
  CHECK( apply_gate( mixed, 0b110, 3 ) == 0b110 );

  /* a constant-0 single-target gate is the identity */
  single_target_gate const idle( 3, { 1, 2 }, control_function::constant( 2, false ) );
  for ( uint32_t s = 0; s < 8; ++s )
  {
    CHECK( apply_gate( idle, s, 3 ) == s );
  }
}

TEST_CASE( "every gate is an involution and never touches non-target lines" )
{
  std::mt19937_64 rng( 7 );
  for ( uint32_t n = 1; n <= 4; ++n )
  {
    for ( uint32_t trial = 0; trial < 50; ++trial )
    {
      auto const g = random_gate( n, rng );
      uint32_t const target = std::visit( []( auto const& gg ) { return gg.target; }, g );
      for ( uint32_t s = 0; s < ( 1u << n ); ++s )
      {
        uint32_t const once = apply_gate( g, s, n );
        REQUIRE( apply_gate( g, once, n ) == s );
        REQUIRE( ( once ^ s ) == ( ( once ^ s ) & ( 1u << bit_position( n, target ) ) ) );
      }
    }
  }
}

TEST_CASE( "simulation of simple cascades" )
{
  circuit const empty( 3 );
  for ( uint32_t s = 0; s < 8; ++s )
  {
    CHECK( simulate( empty, s ) == s );
  }

  /* CNOT(1->2), CNOT(2->1), CNOT(1->2) swaps the two lines */
  circuit cnots( 2 );
  cnots.add_gate( mpmct_gate( 2, { 1 } ) );
  cnots.add_gate( mpmct_gate( 1, { 2 } ) );
  cnots.add_gate( mpmct_gate( 2, { 1 } ) );
  CHECK( circuit_to_permutation( cnots ).map() == std::vector<uint32_t>{ 0, 2, 1, 3 } );

  circuit single_not( 1 );
  single_not.add_gate( mpmct_gate( 1, {} ) );
  CHECK( circuit_to_permutation( single_not ).map() == std::vector<uint32_t>{ 1, 0 } );
}

TEST_CASE( "circuit inversion" )
{
  CHECK( invert( circuit( 2 ) ) == circuit( 2 ) );

  circuit one_gate( 2 );
  one_gate.add_gate( mpmct_gate( 2, { 1 } ) );
  CHECK( invert( one_gate ) == one_gate );

  std::mt19937_64 rng( 11 );
  for ( uint32_t n = 1; n <= 4; ++n )
  {
    circuit c( n );
    for ( uint32_t i = 0; i < 10; ++i )
    {
      c.add_gate( random_gate( n, rng ) );
    }
    auto const p = circuit_to_permutation( c );
    auto const q = circuit_to_permutation( invert( c ) );
    CHECK( q == invert( p ) );

    circuit round_trip = c;
    auto const inverse = invert( c );
    for ( auto const& g : inverse.gates() )
    {
      round_trip.add_gate( g );
    }
    CHECK( circuit_to_permutation( round_trip ).is_identity() );
  }
}

TEST_CASE( "line bounds are enforced" )
{
  circuit c( 2 );
  try
  {
    c.add_gate( mpmct_gate( 3, { 1 } ) );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::line_index_out_of_range );
  }
}

TEST_CASE( "single-target gates expand into equivalent Toffoli cascades" )
{
  /* AND control function gives exactly the classic Toffoli gate */
  single_target_gate const and_gate( 3, { 1, 2 }, control_function( 2, { 0, 0, 0, 1 } ) );
  for ( auto const method : { esop_method::pprm, esop_method::esop_greedy } )
  {
    auto const cascade = map_to_toffoli( and_gate, method );
    REQUIRE( cascade.size() == 1 );
    CHECK( cascade[0] == mpmct_gate( 3, { 1, 2 } ) );
  }

  /* OR: three MCT gates via PPRM, two MPMCT gates via the greedy ESOP */
  single_target_gate const or_gate( 3, { 1, 2 }, control_function( 2, { 0, 1, 1, 1 } ) );
  auto const by_pprm = map_to_toffoli( or_gate, esop_method::pprm );
  REQUIRE( by_pprm.size() == 3 );
  CHECK( by_pprm[0] == mpmct_gate( 3, { 2 } ) );
  CHECK( by_pprm[1] == mpmct_gate( 3, { 1 } ) );
  CHECK( by_pprm[2] == mpmct_gate( 3, { 1, 2 } ) );
  for ( auto const& g : by_pprm )
  {
    CHECK( g.is_mct() );
  }

  auto const by_esop = map_to_toffoli( or_gate, esop_method::esop_greedy );
  REQUIRE( by_esop.size() == 2 );
  CHECK( by_esop[0] == mpmct_gate( 3, { 2 } ) );
  CHECK( by_esop[1] == mpmct_gate( 3, { 1 }, { 2 } ) );

  /* constant-0 control functions vanish */
  single_target_gate const idle( 3, { 1, 2 }, control_function::constant( 2, false ) );
  CHECK( map_to_toffoli( idle, esop_method::pprm ).empty() );
}

TEST_CASE( "expansion is equivalent for every control function of up to 3 controls" )
{
  /* gate on line 4 controlled by lines 1..3 of a 4-line circuit */
  for ( uint32_t bits = 0; bits < 256; ++bits )
  {
    std::vector<uint8_t> values( 8 );
    for ( uint32_t i = 0; i < 8; ++i )
    {
      values[i] = ( bits >> i ) & 1u;
    }
    single_target_gate const stg( 4, { 1, 2, 3 }, control_function( 3, values ) );
    for ( auto const method : { esop_method::pprm, esop_method::esop_greedy } )
    {
      auto const cascade = map_to_toffoli( stg, method );
      circuit c( 4 );
      for ( auto const& g : cascade )
      {
        c.add_gate( g );
      }
      for ( uint32_t s = 0; s < 16; ++s )
      {
        REQUIRE( simulate( c, s ) == apply_gate( stg, s, 4 ) );
      }
    }
  }
}

TEST_CASE( "cascade length equals the term count of the chosen expression" )
{
  std::mt19937_64 rng( 23 );
  for ( uint32_t trial = 0; trial < 50; ++trial )
  {
    auto const g = random_stg( 4, rng );
    auto const table = g.function.to_truth_table();
    CHECK( map_to_toffoli( g, esop_method::pprm ).size() == term_count( pprm( table ) ) );
    CHECK( map_to_toffoli( g, esop_method::esop_greedy ).size() ==
           term_count( esop_davio( table, esop_policy::make_greedy() ) ) );
  }
}
