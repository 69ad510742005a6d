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

#include "revsyn/truth_table.hpp"

#include <string>

namespace revsyn
{

char const* to_string( errc code )
{
  switch ( code )
  {
  case errc::length_mismatch: return "length mismatch";
  case errc::output_overflow: return "output overflow";
  case errc::index_out_of_range: return "index out of range";
  case errc::bad_variable: return "bad variable";
  case errc::not_reversible: return "not reversible";
  case errc::size_mismatch: return "size mismatch";
  case errc::syntax_error: return "syntax error";
  case errc::line_index_out_of_range: return "line index out of range";
  case errc::duplicate_control: return "duplicate control";
  case errc::unsupported_n: return "unsupported n";
  case errc::unsupported_size: return "unsupported size";
  case errc::arity_mismatch: return "arity mismatch";
  }
  return "unknown error";
}

truth_table::truth_table( uint32_t num_inputs, uint32_t num_outputs, std::vector<uint32_t> rows )
    : num_inputs_( num_inputs ), num_outputs_( num_outputs ), rows_( std::move( rows ) )
{
  if ( num_inputs_ > max_vars )
  {
    throw error( errc::unsupported_n,
                 "truth table with " + std::to_string( num_inputs_ ) + " inputs exceeds the cap of " + std::to_string( max_vars ) );
  }
  if ( num_outputs_ == 0 || num_outputs_ > max_vars )
  {
    throw error( errc::unsupported_n,
                 "truth table must have between 1 and " + std::to_string( max_vars ) + " outputs" );
  }
  if ( rows_.size() != ( std::size_t{ 1 } << num_inputs_ ) )
  {
    throw error( errc::length_mismatch,
                 "expected " + std::to_string( 1u << num_inputs_ ) + " rows, got " + std::to_string( rows_.size() ) );
  }
  uint32_t const mask = ( num_outputs_ == 32 ) ? ~0u : ( ( 1u << num_outputs_ ) - 1 );
  for ( std::size_t r = 0; r < rows_.size(); ++r )
  {
    if ( ( rows_[r] & ~mask ) != 0 )
    {
      throw error( errc::output_overflow,
                   "row " + std::to_string( r ) + " does not fit into " + std::to_string( num_outputs_ ) + " output bits" );
    }
  }
}

truth_table truth_table::constant_zero( uint32_t num_inputs, uint32_t num_outputs )
{
  return truth_table( num_inputs, num_outputs, std::vector<uint32_t>( std::size_t{ 1 } << num_inputs, 0u ) );
}

uint32_t truth_table::evaluate( uint32_t input ) const
{
  if ( input >= num_rows() )
  {
    throw error( errc::index_out_of_range,
                 "input " + std::to_string( input ) + " out of range for " + std::to_string( num_inputs_ ) + " variables" );
  }
  return rows_[input];
}

uint32_t truth_table::output_bit( uint32_t input, uint32_t index ) const
{
  if ( index == 0 || index > num_outputs_ )
  {
    throw error( errc::index_out_of_range, "output index " + std::to_string( index ) + " out of range" );
  }
  return ( evaluate( input ) >> ( num_outputs_ - index ) ) & 1u;
}

truth_table cofactor( truth_table const& f, uint32_t var, uint32_t value )
{
  if ( var == 0 || var > f.num_inputs() )
  {
    throw error( errc::bad_variable, "variable " + std::to_string( var ) + " out of range" );
  }
  uint32_t const pos = bit_position( f.num_inputs(), var );
  std::vector<uint32_t> rows( f.num_rows() >> 1 );
  for ( uint32_t r = 0; r < rows.size(); ++r )
  {
    rows[r] = f.rows()[insert_bit( r, pos, value & 1u )];
  }
  return truth_table( f.num_inputs() - 1, f.num_outputs(), std::move( rows ) );
}

truth_table exclusive_or( truth_table const& f, truth_table const& g )
{
  if ( f.num_inputs() != g.num_inputs() || f.num_outputs() != g.num_outputs() )
  {
    throw error( errc::size_mismatch, "tables of different shape" );
  }
  std::vector<uint32_t> rows( f.num_rows() );
  for ( uint32_t r = 0; r < rows.size(); ++r )
  {
    rows[r] = f.rows()[r] ^ g.rows()[r];
  }
  return truth_table( f.num_inputs(), f.num_outputs(), std::move( rows ) );
}

bool is_reversible( truth_table const& f )
{
  if ( f.num_inputs() != f.num_outputs() )
  {
    return false;
  }
  std::vector<bool> seen( f.num_rows(), false );
  for ( auto const row : f.rows() )
  {
    if ( seen[row] )
    {
      return false;
    }
    seen[row] = true;
  }
  return true;
}

} // namespace revsyn
