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

/*!
  \file bits.hpp
  \brief Bit convention helpers

  Global convention: variable x1 is circuit line 1 (topmost) and the MOST
  significant bit of a state index; xn is the least significant bit.  Every
  component shares this mapping, so a line index l on an n-line circuit
  corresponds to index bit position n - l (counted from the LSB).
*/

#pragma once

#include <cstdint>

namespace revsyn
{

/*! Maximum number of variables/lines of any explicit table in this library. */
inline constexpr uint32_t max_vars = 20u;

/*! \brief Index bit position of line \p line on \p num_lines lines. */
constexpr uint32_t bit_position( uint32_t num_lines, uint32_t line )
{
  return num_lines - line;
}

/*! \brief Value of line \p line in state index \p state. */
constexpr uint32_t line_bit( uint32_t state, uint32_t num_lines, uint32_t line )
{
  return ( state >> bit_position( num_lines, line ) ) & 1u;
}

/*! \brief State index with the bit of line \p line flipped. */
constexpr uint32_t flip_line( uint32_t state, uint32_t num_lines, uint32_t line )
{
  return state ^ ( 1u << bit_position( num_lines, line ) );
}

/*! \brief Deletes the bit at position \p pos; higher bits shift down. */
constexpr uint32_t remove_bit( uint32_t value, uint32_t pos )
{
  return ( ( value >> ( pos + 1 ) ) << pos ) | ( value & ( ( 1u << pos ) - 1 ) );
}

/*! \brief Inserts \p bit at position \p pos; higher bits shift up. */
constexpr uint32_t insert_bit( uint32_t value, uint32_t pos, uint32_t bit )
{
  return ( ( value >> pos ) << ( pos + 1 ) ) | ( bit << pos ) | ( value & ( ( 1u << pos ) - 1 ) );
}

} // namespace revsyn
