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
  \file circuit.hpp
  \brief Gate cascades, simulation, and the single-target-to-Toffoli mapping

  Gates apply left to right, so the permutation of a cascade composes with the
  last gate outermost.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"
#include "gate.hpp"
#include "permutation.hpp"

namespace revsyn
{

class circuit
{
public:
  explicit circuit( uint32_t num_lines );
  circuit( uint32_t num_lines, std::vector<gate> gates );

  uint32_t num_lines() const noexcept { return num_lines_; }
  std::vector<gate> const& gates() const noexcept { return gates_; }
  std::size_t num_gates() const noexcept { return gates_.size(); }

  /*! \brief Appends a gate; every referenced line must be in 1 .. num_lines. */
  void add_gate( gate g );

  bool operator==( circuit const& other ) const = default;

private:
  uint32_t num_lines_;
  std::vector<gate> gates_;
};

/*! \brief Applies all gates left to right to one state index. */
uint32_t simulate( circuit const& c, uint32_t input );

/*! \brief The permutation realized by the cascade. */
permutation circuit_to_permutation( circuit const& c );

/*! \brief Inverse circuit: gates in reverse order (every gate is self-inverse). */
circuit invert( circuit const& c );

/*! \brief Expression used when expanding a control function into Toffoli gates. */
enum class esop_method
{
  pprm,       /*!< positive-polarity Reed-Muller; emits MCT gates only */
  esop_greedy /*!< greedy Davio/Shannon ESOP; emits MPMCT gates */
};

/*! \brief Expands a single-target gate into one MPMCT gate per cube.
 *
 * Cube literal polarities become control polarities on the corresponding
 * control lines; a cube over a strict subset of the controls drops the
 * don't-care controls; the constant-1 cube becomes an uncontrolled NOT.  A
 * constant-0 control function yields the empty cascade.
 */
std::vector<mpmct_gate> map_to_toffoli( single_target_gate const& g, esop_method method );

/*! \brief Maps every single-target gate of a circuit; MPMCT gates pass through. */
circuit map_to_toffoli( circuit const& c, esop_method method );

} // namespace revsyn
