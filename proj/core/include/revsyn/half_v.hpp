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
  \file half_v.hpp
  \brief Half-V-shape circuits and the line-saving embedding of
         multiple-output functions

  A half-V circuit on k lines has n <= k single-target gates with targets on
  lines 1 .. n in increasing order, each controlled by all other lines.  These
  circuits canonically represent exactly (2^(2^(k-1)))^n reversible functions,
  which coincides with the size of the set of multiple-output functions with
  k - 1 inputs and n outputs; encode/decode realize that bijection by direct
  transcription (gate i's control function is output component f_i).

  The embedding is representational, not evaluational: the realized reversible
  function F satisfies y_i = x_i XOR f_i(y_1, .., y_{i-1}, x_{i+1}, .., x_k),
  i.e. f is recovered by decoding the recognized circuit, not by reading f(x)
  directly off F's outputs.  In exchange every such function -- including the
  constants, the worst case for conventional ancilla-based embeddings with up
  to 2n - 1 lines -- fits on n lines.
*/

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circuit.hpp"
#include "control_function.hpp"
#include "error.hpp"
#include "permutation.hpp"
#include "truth_table.hpp"

namespace revsyn
{

class half_v_circuit
{
public:
  /*! \brief n = functions.size() gates on \p num_lines >= n lines; every
   * control function must have arity num_lines - 1. */
  half_v_circuit( uint32_t num_lines, std::vector<control_function> functions );

  uint32_t num_lines() const noexcept { return num_lines_; }
  uint32_t num_gates() const noexcept { return static_cast<uint32_t>( functions_.size() ); }
  std::vector<control_function> const& functions() const noexcept { return functions_; }

  bool operator==( half_v_circuit const& other ) const = default;

private:
  uint32_t num_lines_;
  std::vector<control_function> functions_;
};

/*! \brief Literal expansion into single-target gates; gate i targets line i
 * with all other lines as controls.  Constant-0 gates are kept (the expansion
 * is canonical, not minimized). */
circuit to_circuit( half_v_circuit const& h );

/*! \brief Counts distinct permutations over all control-function tuples.
 * Must equal (2^(2^(k-1)))^n; guarded by errc::unsupported_size. */
uint64_t enumerate_half_v( uint32_t num_gates, uint32_t num_lines );

/*! \brief Two inputs with equal control pattern but different target
 * behavior, pinpointing why a permutation is not realizable. */
struct fiber_witness
{
  uint32_t gate_index; /*!< 1-based gate (or line, for untouched-line failures) */
  uint32_t input_a;
  uint32_t input_b;
};

struct recognize_result
{
  std::optional<half_v_circuit> circuit;
  std::optional<fiber_witness> failure;

  bool ok() const noexcept { return circuit.has_value(); }
};

/*! \brief Sequential extraction of the canonical half-V form.
 *
 * Before gate i fires, lines 1 .. i-1 hold final outputs and lines i .. k
 * still hold inputs, so y_i = x_i XOR g_i(y_1, .., y_{i-1}, x_{i+1}, .., x_k).
 * For each gate the XOR of y_i and x_i must be constant on every fiber of the
 * control pattern; lines beyond \p num_gates must pass through unchanged.
 */
recognize_result recognize_half_v( permutation const& p, uint32_t num_gates );

/*! \brief Embeds f with k-1 inputs and n <= k outputs as a half-V circuit. */
half_v_circuit encode( truth_table const& f, uint32_t num_lines );

/*! \brief Exact inverse of encode. */
truth_table decode( half_v_circuit const& h );

/*! \brief .rc writer restricted to the half-V shape.
 *
 * Emits a "# halfv n=<n> k=<k>" header comment before the circuit.  Since
 * the cube grammar has no constant-0 expression, constant-0 gates are not
 * written; the reader reconstructs them from the header.
 */
void write_half_v( std::ostream& out, half_v_circuit const& h );
std::string to_rc_string( half_v_circuit const& h );
void write_half_v_file( std::string const& path, half_v_circuit const& h );

half_v_circuit read_half_v( std::istream& in );
half_v_circuit read_half_v( std::string_view text );
half_v_circuit read_half_v_file( std::string const& path );

} // namespace revsyn
