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

#include "revsyn/control_function.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "revsyn/bits.hpp"

namespace revsyn
{

control_function::control_function()
    : arity_( 0 ), bits_( 1, 0u )
{
}

control_function::control_function( uint32_t arity, std::vector<uint8_t> bits )
    : arity_( arity ), bits_( std::move( bits ) )
{
  if ( arity_ > max_vars )
  {
    throw error( errc::unsupported_n, "control function arity exceeds " + std::to_string( max_vars ) );
  }
  if ( bits_.size() != ( std::size_t{ 1 } << arity_ ) )
  {
    throw error( errc::length_mismatch,
                 "expected " + std::to_string( 1u << arity_ ) + " values, got " + std::to_string( bits_.size() ) );
  }
  for ( auto const b : bits_ )
  {
    if ( b > 1 )
    {
      throw error( errc::output_overflow, "control function values must be 0 or 1" );
    }
  }
}

control_function control_function::constant( uint32_t arity, bool value )
{
  return control_function( arity, std::vector<uint8_t>( std::size_t{ 1 } << arity, value ? 1u : 0u ) );
}

control_function control_function::from_truth_table( truth_table const& f )
{
  if ( f.num_outputs() != 1 )
  {
    throw error( errc::arity_mismatch, "control function requires a single-output table" );
  }
  std::vector<uint8_t> bits( f.num_rows() );
  for ( uint32_t r = 0; r < bits.size(); ++r )
  {
    bits[r] = static_cast<uint8_t>( f.rows()[r] & 1u );
  }
  return control_function( f.num_inputs(), std::move( bits ) );
}

truth_table control_function::to_truth_table() const
{
  std::vector<uint32_t> rows( bits_.begin(), bits_.end() );
  return truth_table( arity_, 1, std::move( rows ) );
}

bool control_function::evaluate( uint32_t assignment ) const
{
  if ( assignment >= bits_.size() )
  {
    throw error( errc::index_out_of_range, "assignment out of range" );
  }
  return bits_[assignment] != 0;
}

bool control_function::is_constant_zero() const
{
  return std::all_of( bits_.begin(), bits_.end(), []( uint8_t b ) { return b == 0; } );
}

bool control_function::is_constant_one() const
{
  return std::all_of( bits_.begin(), bits_.end(), []( uint8_t b ) { return b == 1; } );
}

control_function exclusive_or( control_function const& g, control_function const& h )
{
  if ( g.arity() != h.arity() )
  {
    throw error( errc::size_mismatch, "control functions of different arity" );
  }
  std::vector<uint8_t> bits( g.bits().size() );
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    bits[i] = g.bits()[i] ^ h.bits()[i];
  }
  return control_function( g.arity(), std::move( bits ) );
}

} // namespace revsyn
