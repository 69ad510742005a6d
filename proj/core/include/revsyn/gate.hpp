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
  \file gate.hpp
  \brief Reversible gates: single-target gates and mixed-polarity Toffoli gates

  A single-target gate flips its target line exactly when its control function
  evaluates to 1 on the control lines; all other lines pass through.  Control
  lines are kept in ascending order and variable j of the control function is
  the j-th smallest control line.  An MPMCT gate is the special case of a
  single product term; an MCT gate has positive controls only.
*/

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "control_function.hpp"
#include "error.hpp"

namespace revsyn
{

struct single_target_gate
{
  /*! Controls are sorted on construction; the target must not be a control
   * and the function arity must equal the control count. */
  single_target_gate( uint32_t target, std::vector<uint32_t> controls, control_function function );

  uint32_t target;
  std::vector<uint32_t> controls;
  control_function function;

  bool operator==( single_target_gate const& other ) const = default;
};

struct mpmct_gate
{
  /*! Control sets are sorted on construction and must be disjoint from each
   * other and from the target. */
  mpmct_gate( uint32_t target, std::vector<uint32_t> positive, std::vector<uint32_t> negative = {} );

  bool is_mct() const { return negative.empty(); }

  uint32_t target;
  std::vector<uint32_t> positive;
  std::vector<uint32_t> negative;

  bool operator==( mpmct_gate const& other ) const = default;
};

using gate = std::variant<single_target_gate, mpmct_gate>;

/*! \brief Largest line index referenced by the gate. */
uint32_t max_line( gate const& g );

uint32_t apply_gate( single_target_gate const& g, uint32_t state, uint32_t num_lines );
uint32_t apply_gate( mpmct_gate const& g, uint32_t state, uint32_t num_lines );
uint32_t apply_gate( gate const& g, uint32_t state, uint32_t num_lines );

} // namespace revsyn
