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
  \file truth_table.hpp
  \brief Explicit value tables for Boolean multiple-output functions

  A truth table stores a function with n inputs and m outputs as 2^n output
  words.  Row r holds the outputs for input pattern r, with output f1 in the
  most significant of the m word bits (mirroring the x1-is-MSB convention on
  the input side).
*/

#pragma once

#include <cstdint>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace revsyn
{

class truth_table
{
public:
  /*! \brief Constructs a table from explicit rows.
   *
   * Requires rows.size() == 2^num_inputs and every word to fit into
   * num_outputs bits; throws error with code errc::length_mismatch or
   * errc::output_overflow otherwise.  Both arities are capped at max_vars.
   */
  truth_table( uint32_t num_inputs, uint32_t num_outputs, std::vector<uint32_t> rows );

  /*! \brief All-zero table of the given shape. */
  static truth_table constant_zero( uint32_t num_inputs, uint32_t num_outputs );

  uint32_t num_inputs() const noexcept { return num_inputs_; }
  uint32_t num_outputs() const noexcept { return num_outputs_; }
  uint32_t num_rows() const noexcept { return 1u << num_inputs_; }

  /*! \brief Output word for input pattern \p input (range-checked). */
  uint32_t evaluate( uint32_t input ) const;

  /*! \brief Value of output component f_index (1-based) on \p input. */
  uint32_t output_bit( uint32_t input, uint32_t index ) const;

  std::vector<uint32_t> const& rows() const noexcept { return rows_; }
  std::vector<uint32_t>& rows() noexcept { return rows_; }

  bool operator==( truth_table const& other ) const = default;

private:
  uint32_t num_inputs_;
  uint32_t num_outputs_;
  std::vector<uint32_t> rows_;
};

/*! \brief Fixes variable \p var (1-based) to \p value.
 *
 * Returns the function over the remaining n-1 variables in original order.
 * Throws errc::bad_variable if var is not in 1..n.
 */
truth_table cofactor( truth_table const& f, uint32_t var, uint32_t value );

/*! \brief Row-wise XOR of two tables of identical shape. */
truth_table exclusive_or( truth_table const& f, truth_table const& g );

/*! \brief True iff the table is a bijection (n = m and rows pairwise distinct). */
bool is_reversible( truth_table const& f );

} // namespace revsyn
