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
  \file permutation.hpp
  \brief Reversible functions as bijections on state indices 0 .. 2^n - 1
*/

#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"
#include "truth_table.hpp"

namespace revsyn
{

class permutation
{
public:
  /*! \brief Identity permutation on \p num_lines lines. */
  explicit permutation( uint32_t num_lines );

  /*! \brief Constructs from an explicit image map; must be a bijection. */
  permutation( uint32_t num_lines, std::vector<uint32_t> map );

  static permutation identity( uint32_t num_lines ) { return permutation( num_lines ); }

  /*! \brief Conversion from a reversible truth table (errc::not_reversible otherwise). */
  static permutation from_truth_table( truth_table const& f );

  truth_table to_truth_table() const;

  uint32_t num_lines() const noexcept { return num_lines_; }
  uint32_t size() const noexcept { return 1u << num_lines_; }

  uint32_t operator[]( uint32_t state ) const { return map_[state]; }

  std::vector<uint32_t> const& map() const noexcept { return map_; }

  bool is_identity() const;

  bool operator==( permutation const& other ) const = default;

private:
  uint32_t num_lines_;
  std::vector<uint32_t> map_;
};

/*! \brief Composition p after q: compose(p, q)[r] = p[q[r]]. */
permutation compose( permutation const& p, permutation const& q );

/*! \brief Group inverse. */
permutation invert( permutation const& p );

/*! \brief Seeded uniform random permutation (deterministic across runs). */
permutation random_permutation( uint32_t num_lines, uint64_t seed );

/*! \brief Lexicographic rank of the image map, 0 .. (2^n)! - 1 (n <= 4). */
uint64_t rank( permutation const& p );

/*! \brief Inverse of rank (n <= 4). */
permutation permutation_from_rank( uint32_t num_lines, uint64_t rank );

} // namespace revsyn
