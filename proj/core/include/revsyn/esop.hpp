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
  \file esop.hpp
  \brief Two-level AND-EXOR algebra: cubes, expressions, expansions, PPRM

  An expression evaluates as the XOR over its cubes; a cube evaluates to 1 iff
  every care variable matches its polarity bit.  Cube masks live in index
  space: variable x_i of an n-variable function owns mask bit n - i, matching
  the global x1-is-MSB convention.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "truth_table.hpp"

namespace revsyn
{

/*! \brief Mixed-polarity product term.
 *
 * care marks the variables appearing in the term, polarity the positive
 * literals among them (polarity is a subset of care).  care == 0 is the
 * constant-1 term.
 */
struct cube
{
  uint32_t care = 0;
  uint32_t polarity = 0;

  /*! \brief True iff the term evaluates to 1 under \p assignment. */
  bool matches( uint32_t assignment ) const
  {
    return ( ( assignment ^ polarity ) & care ) == 0;
  }

  auto operator<=>( cube const& other ) const = default;
};

struct esop_expr
{
  uint32_t num_vars = 0;
  std::vector<cube> cubes;

  bool operator==( esop_expr const& other ) const = default;
};

/*! \brief XOR over cube evaluations; the empty expression is constant 0. */
bool evaluate( esop_expr const& expr, uint32_t assignment );

inline std::size_t term_count( esop_expr const& expr ) { return expr.cubes.size(); }

/*! \brief Cofactor pair (f with var = 0, f with var = 1). */
std::pair<truth_table, truth_table> expand_shannon( truth_table const& f, uint32_t var );

/*! \brief Positive Davio pair (f with var = 0, XOR of both cofactors). */
std::pair<truth_table, truth_table> expand_davio_positive( truth_table const& f, uint32_t var );

/*! \brief Negative Davio pair (f with var = 1, XOR of both cofactors). */
std::pair<truth_table, truth_table> expand_davio_negative( truth_table const& f, uint32_t var );

/*! \brief Unique positive-polarity Reed-Muller expression of a single-output
 * function, computed by the in-place Reed-Muller butterfly transform.
 * Cubes are emitted in ascending care-mask order.
 */
esop_expr pprm( truth_table const& f );

/*! \brief Expansion-rule choice for esop_davio. */
struct esop_policy
{
  enum class kind : uint8_t
  {
    pprm,   /*!< positive Davio everywhere */
    fixed,  /*!< per-variable fixed polarity */
    greedy  /*!< per node, the rule minimizing the resulting cube count */
  };

  static esop_policy make_pprm() { return { kind::pprm, 0 }; }

  /*! \p positive_mask in index space: a set bit selects positive Davio for
   * that variable, a clear bit negative Davio. */
  static esop_policy make_fixed( uint32_t positive_mask ) { return { kind::fixed, positive_mask }; }

  static esop_policy make_greedy() { return { kind::greedy, 0 }; }

  kind which;
  uint32_t positive_mask;
};

/*! \brief Recursive Davio/Shannon expansion into an ESOP expression.
 *
 * The recursion splits on the lowest-index remaining variable.  With the
 * greedy policy all three rules are expanded per node and the one yielding
 * the fewest cubes wins; ties break toward positive Davio, then negative
 * Davio, then Shannon.  The greedy result never has more cubes than the
 * PPRM.  This is a heuristic; no exact minimum-ESOP search is attempted.
 * Cubes of the result are in canonical ascending (care, polarity) order.
 */
esop_expr esop_davio( truth_table const& f, esop_policy const& policy );

/*! \brief One literal of the textual cube grammar: xN or !xN. */
struct raw_literal
{
  uint32_t index;
  bool positive;
};

/*! \brief Cube in the textual grammar; the empty literal list is the "1" term. */
using raw_cube = std::vector<raw_literal>;

/*! \brief Parses "x1&!x2 ^ x3"-style text into literal lists.
 *
 * Grammar: expression = cubes joined by '^'; cube = literals joined by '&';
 * literal = "xN" (positive) or "!xN" (negative); the constant-1 cube is "1".
 * Throws error with errc::syntax_error on malformed input; the circuit
 * reader wraps these into parse_error with the source line.
 */
std::vector<raw_cube> parse_esop_cubes( std::string_view text );

/*! \brief Parses an expression over variables x1 .. x(num_vars). */
esop_expr parse_esop( std::string_view text, uint32_t num_vars );

/*! \brief Canonical text form; cubes sorted ascending by (care, polarity).
 * The constant-0 (empty) expression has no textual form and yields "".
 */
std::string to_string( esop_expr const& expr );

std::string to_string( cube const& c, uint32_t num_vars );

} // namespace revsyn
