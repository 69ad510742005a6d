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
  \file enumeration.hpp
  \brief One-gate function counting and the exact optimal-size BFS oracle
*/

#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace revsyn
{

enum class gate_library
{
  mct,  /*!< positive controls only; n 2^(n-1) distinct one-gate functions */
  mpmct /*!< mixed polarity; n 3^(n-1) distinct one-gate functions */
};

/*! \brief All distinct permutations realized by one gate of the library. */
std::vector<permutation> one_gate_permutations( uint32_t n, gate_library library );

/*! \brief Number of distinct one-MCT-gate functions, by enumeration (n <= 6). */
uint64_t count_one_gate_functions( uint32_t n );

struct bfs_result
{
  uint32_t n;
  gate_library library;
  uint32_t worst_case;              /*!< largest minimal gate count */
  std::vector<uint64_t> histogram;  /*!< histogram[s] = functions of minimal size s */
};

/*! \brief Exact minimal gate counts for every reversible function (n <= 3).
 *
 * Breadth-first search from the identity over single-gate right
 * multiplications; the histogram sums to (2^n)!.
 */
bfs_result bfs_optimal_sizes( uint32_t n, gate_library library );

} // namespace revsyn
