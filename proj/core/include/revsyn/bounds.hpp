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
  \file bounds.hpp
  \brief Exact evaluation of the Toffoli-count lower bound

  A circuit of k Toffoli gates on n lines realizes at most (n 2^(n-1))^k
  functions, so among the (2^n)! reversible functions some function needs at
  least ceil(log((2^n)!) / log(n 2^(n-1))) gates.  This bound is evaluated
  either by exact big-integer comparison or by a certified floating interval
  with directed rounding; the two routes agree wherever both run.
*/

#pragma once

#include <cstdint>

#include "error.hpp"

namespace revsyn
{

enum class bound_mode
{
  automatic, /*!< exact for n <= 10, interval beyond */
  exact,     /*!< big-integer comparison; n <= 10 */
  interval   /*!< certified directed-rounding interval */
};

struct bound_report
{
  uint32_t n;
  uint64_t lower_bound;
  bool exact; /*!< true iff decided by exact integer comparison */

  bool operator==( bound_report const& other ) const = default;
};

/*! \brief Least k with (n 2^(n-1))^k >= (2^n)!.
 *
 * n = 1 is degenerate (the denominator log(1) vanishes) and returns 1 when
 * \p allow_degenerate is set, otherwise throws errc::unsupported_n.  If the
 * certified interval straddles an integer the result is widened to the safe
 * smaller value; interval results always carry exact = false.
 */
bound_report lower_bound_toffoli( uint32_t n,
                                  bound_mode mode = bound_mode::automatic,
                                  bool allow_degenerate = true );

/*! \brief True iff log2((2^n)!) >= 2^n * n / 2, decided exactly.
 *
 * Small n compare (2^n)! against 2^(n 2^(n-1)) with big integers; beyond
 * that a certified interval decides, falling back to the integer comparison
 * if inconclusive.  Valid for 1 <= n <= 20.
 */
bool check_induction_inequality( uint32_t n );

} // namespace revsyn
