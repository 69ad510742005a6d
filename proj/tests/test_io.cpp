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
#include <string>

#include <revsyn/io.hpp>

using namespace revsyn;

TEST_CASE( ".tt reading" )
{
  auto const f = read_truth_table( ".i 2\n.o 1\n0\n0\n0\n1\n" );
  CHECK( f == truth_table( 2, 1, { 0, 0, 0, 1 } ) );

  /* comments and blank lines are ignored; f1 is the leftmost digit */
  auto const g = read_truth_table( "# and gate\n.i 1\n.o 2\n\n01  # row 0\n10\n" );
  CHECK( g == truth_table( 1, 2, { 1, 2 } ) );
}

TEST_CASE( ".tt writing is canonical and round trips" )
{
  truth_table const f( 2, 2, { 0, 2, 1, 3 } );
  auto const text = to_tt_string( f );
  CHECK( text == ".i 2\n.o 2\n00\n10\n01\n11\n" );
  CHECK( read_truth_table( text ) == f );
  CHECK( to_tt_string( read_truth_table( text ) ) == text );
}

TEST_CASE( ".tt errors carry line numbers" )
{
  auto const failure = []( char const* text ) -> parse_error {
    try
    {
      read_truth_table( text );
    }
    catch ( parse_error const& e )
    {
      return e;
    }
    throw std::logic_error( "expected a parse error" );
  };

  auto e = failure( ".i 1\n.o 1\n0\n" );
  CHECK( e.code() == errc::length_mismatch );

  e = failure( ".i 1\n.o 1\n0\n1\n1\n" );
  CHECK( e.code() == errc::length_mismatch );

  e = failure( ".i 1\n.o 1\n0\n2\n" );
  CHECK( e.code() == errc::syntax_error );
  CHECK( e.line() == 4 );

  e = failure( ".o 1\n.i 1\n0\n1\n" );
  CHECK( e.code() == errc::syntax_error );

  e = failure( ".i 1\n.o 2\n0\n11\n" );
  CHECK( e.code() == errc::length_mismatch );
  CHECK( e.line() == 3 );
}

TEST_CASE( ".rc reading of Toffoli gates" )
{
  auto const c = read_circuit( ".lines 3\nt x1 x2 x3\n" );
  REQUIRE( c.num_gates() == 1 );
  CHECK( std::get<mpmct_gate>( c.gates()[0] ) == mpmct_gate( 3, { 1, 2 } ) );

  auto const mixed = read_circuit( ".lines 3\nt !x2 x1 x3\nt x2\n" );
  CHECK( std::get<mpmct_gate>( mixed.gates()[0] ) == mpmct_gate( 3, { 1 }, { 2 } ) );
  CHECK( std::get<mpmct_gate>( mixed.gates()[1] ) == mpmct_gate( 2, {} ) );
}

TEST_CASE( ".rc reading of single-target gates" )
{
  auto const c = read_circuit( ".lines 3\nstg 3 : x1&!x2 ^ 1\n" );
  REQUIRE( c.num_gates() == 1 );
  auto const& g = std::get<single_target_gate>( c.gates()[0] );
  CHECK( g.target == 3 );
  CHECK( g.controls == std::vector<uint32_t>{ 1, 2 } );
  /* (x1 & !x2) xor 1 */
  CHECK( g.function == control_function( 2, { 1, 1, 0, 1 } ) );

  auto const with = read_circuit( ".lines 3\nstg 2 : x1 with x3\n" );
  auto const& h = std::get<single_target_gate>( with.gates()[0] );
  CHECK( h.controls == std::vector<uint32_t>{ 1, 3 } );
  CHECK( h.function == control_function( 2, { 0, 0, 1, 1 } ) );
}

TEST_CASE( ".rc parse errors carry line numbers and codes" )
{
  auto const failure = []( char const* text ) -> parse_error {
    try
    {
      read_circuit( text );
    }
    catch ( parse_error const& e )
    {
      return e;
    }
    throw std::logic_error( "expected a parse error" );
  };

  auto e = failure( "t x1 x2\n" );
  CHECK( e.code() == errc::syntax_error ); /* missing .lines */

  e = failure( ".lines 2\nnop x1\n" );
  CHECK( e.code() == errc::syntax_error );
  CHECK( e.line() == 2 );

  e = failure( ".lines 2\nt x1 x3\n" );
  CHECK( e.code() == errc::line_index_out_of_range );

  e = failure( ".lines 3\nt x1 x1 x3\n" );
  CHECK( e.code() == errc::duplicate_control );

  e = failure( ".lines 3\nt x1 !x1 x3\n" );
  CHECK( e.code() == errc::duplicate_control );

  e = failure( ".lines 3\nstg 3 : x3\n" );
  CHECK( e.code() == errc::duplicate_control ); /* target used as control */

  e = failure( ".lines 3\nstg 3 : x1 with x1\n" );
  CHECK( e.code() == errc::duplicate_control );

  e = failure( ".lines 3\nstg 3 : x1 &\n" );
  CHECK( e.code() == errc::syntax_error );
  CHECK( e.line() == 2 );
}

TEST_CASE( ".rc writing is canonical" )
{
  circuit c( 3 );
  c.add_gate( mpmct_gate( 3, { 1 }, { 2 } ) );
  c.add_gate( single_target_gate( 3, { 1, 2 }, control_function( 2, { 1, 1, 0, 1 } ) ) );
  c.add_gate( single_target_gate( 2, { 1, 3 }, control_function::constant( 2, false ) ) );
  c.add_gate( single_target_gate( 1, { 2, 3 }, control_function::constant( 2, true ) ) );

  auto const text = to_rc_string( c );
  CHECK( text == ".lines 3\n"
                 "t x1 !x2 x3\n"
                 "stg 3 : 1 ^ x1 ^ x1&x2\n"
                 "stg 1 : 1 with x2,x3\n" );

  /* the constant-0 gate was dropped; the permutation is unchanged */
  auto const back = read_circuit( text );
  CHECK( circuit_to_permutation( back ) == circuit_to_permutation( c ) );
  CHECK( to_rc_string( back ) == text );
}

TEST_CASE( "fuzzed circuits normalize to a fixed point" )
{
  std::mt19937_64 rng( 2026 );
  for ( uint32_t trial = 0; trial < 200; ++trial )
  {
    uint32_t const n = 1 + static_cast<uint32_t>( rng() % 4 );
    circuit c( n );
    uint32_t const gates = static_cast<uint32_t>( rng() % 6 );
    for ( uint32_t i = 0; i < gates; ++i )
    {
      uint32_t const target = 1 + static_cast<uint32_t>( rng() % n );
      std::vector<uint32_t> positive, negative, controls;
      for ( uint32_t l = 1; l <= n; ++l )
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
        if ( rng() & 1u )
        {
          controls.push_back( l );
        }
      }
      if ( rng() & 1u )
      {
        c.add_gate( mpmct_gate( target, positive, negative ) );
      }
      else
      {
        std::vector<uint8_t> bits( 1u << controls.size() );
        for ( auto& b : bits )
        {
          b = static_cast<uint8_t>( rng() & 1u );
        }
        c.add_gate( single_target_gate( target, controls,
                                        control_function( static_cast<uint32_t>( controls.size() ), bits ) ) );
      }
    }

    auto const text = to_rc_string( c );
    auto const parsed = read_circuit( text );
    CHECK( to_rc_string( parsed ) == text );
    CHECK( circuit_to_permutation( parsed ) == circuit_to_permutation( c ) );
  }
}
