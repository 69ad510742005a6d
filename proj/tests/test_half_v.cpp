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

#include <revsyn/half_v.hpp>
#include <revsyn/io.hpp>

using namespace revsyn;

namespace
{

half_v_circuit from_codes( uint32_t num_lines, std::vector<uint32_t> const& codes )
{
  std::vector<control_function> gs;
  for ( auto const code : codes )
  {
    std::vector<uint8_t> bits( 1u << ( num_lines - 1 ) );
    for ( uint32_t b = 0; b < bits.size(); ++b )
    {
      bits[b] = static_cast<uint8_t>( ( code >> b ) & 1u );
    }
    gs.emplace_back( num_lines - 1, std::move( bits ) );
  }
  return half_v_circuit( num_lines, std::move( gs ) );
}

} // namespace

TEST_CASE( "expansion into a plain circuit" )
{
  auto const not1 = from_codes( 1, { 1 } ); /* one line, constant-1 gate */
  auto const c = to_circuit( not1 );
  REQUIRE( c.num_gates() == 1 );
  CHECK( circuit_to_permutation( c ).map() == std::vector<uint32_t>{ 1, 0 } );

  /* the expansion keeps constant-0 gates: two gates, not one */
  auto const h = from_codes( 2, { 0b10, 0b00 } ); /* g1 = x, g2 = 0 */
  auto const expanded = to_circuit( h );
  REQUIRE( expanded.num_gates() == 2 );
  /* line 2 feeds gate 1: y1 = x1 xor x2 */
  CHECK( circuit_to_permutation( expanded ).map() == std::vector<uint32_t>{ 0, 3, 2, 1 } );
}

TEST_CASE( "tuple enumeration matches the closed formula" )
{
  CHECK( enumerate_half_v( 1, 1 ) == 2 );
  CHECK( enumerate_half_v( 1, 2 ) == 4 );
  CHECK( enumerate_half_v( 2, 2 ) == 16 );
  CHECK( enumerate_half_v( 1, 3 ) == 16 );
  CHECK( enumerate_half_v( 2, 3 ) == 256 );
  CHECK( enumerate_half_v( 1, 4 ) == 256 );

  try
  {
    enumerate_half_v( 2, 1 );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::arity_mismatch );
  }
  try
  {
    enumerate_half_v( 3, 6 );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::unsupported_size );
  }
}

TEST_CASE( "recognition of fixed permutations" )
{
  auto const id = recognize_half_v( permutation( 2 ), 2 );
  REQUIRE( id.ok() );
  CHECK( id.circuit->functions()[0] == control_function::constant( 1, false ) );
  CHECK( id.circuit->functions()[1] == control_function::constant( 1, false ) );

  /* the swap needs its first gate to read x1 xor x2, which is not constant
   * on the fibers of x2 */
  auto const swap = recognize_half_v( permutation( 2, { 0, 2, 1, 3 } ), 2 );
  REQUIRE( !swap.ok() );
  CHECK( swap.failure->gate_index == 1 );
  auto const a = swap.failure->input_a;
  auto const b = swap.failure->input_b;
  CHECK( ( a & 1u ) == ( b & 1u ) ); /* same fiber: x2 agrees */
  CHECK( a != b );

  /* an untouched trailing line must pass through */
  auto const not1 = recognize_half_v( permutation( 2, { 2, 3, 0, 1 } ), 1 );
  CHECK( not1.ok() ); /* NOT on line 1; line 2 untouched */
  auto const not2 = recognize_half_v( permutation( 2, { 1, 0, 3, 2 } ), 1 );
  REQUIRE( !not2.ok() ); /* NOT on line 2, which no gate may touch */
  CHECK( not2.failure->gate_index == 2 );
}

TEST_CASE( "recognition inverts expansion on every 2-line tuple" )
{
  for ( uint32_t c1 = 0; c1 < 4; ++c1 )
  {
    for ( uint32_t c2 = 0; c2 < 4; ++c2 )
    {
      auto const h = from_codes( 2, { c1, c2 } );
      auto const p = circuit_to_permutation( to_circuit( h ) );
      auto const back = recognize_half_v( p, 2 );
      REQUIRE( back.ok() );
      REQUIRE( *back.circuit == h );
    }
  }
}

TEST_CASE( "encoding fixed functions" )
{
  /* f = (x1, !x1): gate 1 carries the identity, gate 2 the negation */
  truth_table const f( 1, 2, { 0b01, 0b10 } );
  auto const h = encode( f, 2 );
  CHECK( h.functions()[0] == control_function( 1, { 0, 1 } ) );
  CHECK( h.functions()[1] == control_function( 1, { 1, 0 } ) );
  CHECK( decode( h ) == f );

  /* constants embed on n lines as the identity circuit */
  auto const constant = truth_table::constant_zero( 2, 3 );
  auto const hc = encode( constant, 3 );
  CHECK( circuit_to_permutation( to_circuit( hc ) ).is_identity() );
  CHECK( decode( hc ) == constant );

  try
  {
    encode( truth_table::constant_zero( 2, 3 ), 4 );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::arity_mismatch );
  }
}

TEST_CASE( "encode and decode are mutually inverse on all 16 smallest functions" )
{
  for ( uint32_t code = 0; code < 16; ++code )
  {
    truth_table const f( 1, 2, { code & 3u, ( code >> 2 ) & 3u } );
    auto const h = encode( f, 2 );
    REQUIRE( decode( h ) == f );
    auto const back = recognize_half_v( circuit_to_permutation( to_circuit( h ) ), 2 );
    REQUIRE( back.ok() );
    REQUIRE( *back.circuit == h );
  }
}

TEST_CASE( "half-V files round trip, including dropped constant-0 gates" )
{
  auto const h = from_codes( 3, { 0b1010, 0b0000, 0b0110 } );
  auto const text = to_rc_string( h );
  CHECK( text.rfind( "# halfv n=3 k=3\n", 0 ) == 0 );
  auto const back = read_half_v( text );
  CHECK( back == h );

  /* the plain circuit reader sees the same permutation */
  CHECK( circuit_to_permutation( read_circuit( text ) ) ==
         circuit_to_permutation( to_circuit( h ) ) );

  try
  {
    read_half_v( ".lines 2\nt x1 x2\n" );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::syntax_error ); /* missing header */
  }
  try
  {
    read_half_v( "# halfv n=2 k=2\n.lines 2\nt x1 x2\n" );
    CHECK( false );
  }
  catch ( error const& e )
  {
    CHECK( e.code() == errc::syntax_error ); /* not half-V shaped */
  }
}
