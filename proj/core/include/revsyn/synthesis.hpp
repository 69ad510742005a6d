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
  \file synthesis.hpp
  \brief Young-subgroup decomposition and V-shape single-target-gate synthesis

  One decomposition step splits a permutation f into T_g2 . f' . T_g1 where
  both outer factors are single-target gates on the chosen variable and the
  residual f' preserves that variable's bit.  Applying the step once per
  variable drives the residual to the identity; collecting the gates (and
  merging the two innermost ones, whose targets coincide) realizes any
  reversible function on n lines with at most 2n - 1 single-target gates,
  targets aligned on a V-shape.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "circuit.hpp"
#include "control_function.hpp"
#include "error.hpp"
#include "permutation.hpp"

namespace revsyn
{

struct decomposition_step
{
  uint32_t var;            /*!< decomposed variable (1-based line) */
  control_function g1;     /*!< input-side gate function over the other n-1 variables */
  control_function g2;     /*!< output-side gate function over the other n-1 variables */
  permutation inner;       /*!< residual; preserves the bit of var */
};

/*! \brief One Young-subgroup step for variable \p var.
 *
 * Rows are paired by their var-deleted rest pattern on the input and output
 * side; the resulting bipartite multigraph (one edge per row) falls apart
 * into even cycles, which are traversed with alternating 0/1 edge labels.
 * Traversal starts at each cycle's lowest-numbered input pair on the edge
 * whose row has var = 0, which makes the decomposition deterministic.
 * g1 reads the labels off the input rows with var = 0, g2 off the output
 * rows with var = 0, and inner = T_g2 . f . T_g1.
 */
decomposition_step decompose( permutation const& f, uint32_t var );

/*! \brief Full synthesis; processes variables in \p order (default 1 .. n).
 *
 * The two gates of the final step are merged into one (their control
 * functions XORed) and constant-0 control functions are dropped, so the
 * result has at most 2n - 1 gates and realizes f exactly.
 */
circuit young_subgroup_synthesis( permutation const& f );
circuit young_subgroup_synthesis( permutation const& f, std::vector<uint32_t> const& order );

/*! \brief Synthesis followed by per-gate Toffoli mapping. */
circuit synthesize_toffoli( permutation const& f, esop_method method );
circuit synthesize_toffoli( permutation const& f, std::vector<uint32_t> const& order, esop_method method );

} // namespace revsyn
