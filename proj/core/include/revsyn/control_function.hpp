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
  \file control_function.hpp
  \brief Single-output predicate deciding whether a single-target gate fires
*/

#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"
#include "truth_table.hpp"

namespace revsyn
{

/*! \brief A Boolean function of k variables as a value vector of length 2^k. */
class control_function
{
public:
  /*! \brief Arity-0 constant 0. */
  control_function();

  /*! \brief Constructs from a 0/1 value vector of length 2^arity. */
  control_function( uint32_t arity, std::vector<uint8_t> bits );

  static control_function constant( uint32_t arity, bool value );

  static control_function from_truth_table( truth_table const& f );

  truth_table to_truth_table() const;

  uint32_t arity() const noexcept { return arity_; }

  bool evaluate( uint32_t assignment ) const;

  bool is_constant_zero() const;
  bool is_constant_one() const;

  std::vector<uint8_t> const& bits() const noexcept { return bits_; }

  bool operator==( control_function const& other ) const = default;

private:
  uint32_t arity_;
  std::vector<uint8_t> bits_;
};

/*! \brief Pointwise XOR of two control functions of equal arity. */
control_function exclusive_or( control_function const& g, control_function const& h );

} // namespace revsyn
