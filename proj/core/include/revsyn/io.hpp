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
  \file io.hpp
  \brief Readers and writers for the .tt and .rc text formats

  .tt: ".i N" and ".o M" header lines, then exactly 2^N data lines in
  ascending input order, each an M-character 0/1 string giving outputs
  f1 .. fM left to right.

  .rc: ".lines N" header, then one gate per line.  Toffoli gates:
  "t <ctrl>* <target>" with ctrl = "xK" (positive) or "!xK" (negative) and
  the target last.  Single-target gates: "stg <K> : <esop-expression>" over
  line-named variables, with an optional "with xA,xB" suffix listing control
  lines that do not appear in the expression.  Comments start with '#' in
  both formats.  The writers are canonical: ascending controls, cubes in
  ascending (care, polarity) order, and constant-0 single-target gates (the
  identity) are dropped.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "circuit.hpp"
#include "error.hpp"
#include "truth_table.hpp"

namespace revsyn
{

truth_table read_truth_table( std::istream& in );
truth_table read_truth_table( std::string_view text );
truth_table read_truth_table_file( std::string const& path );

void write_truth_table( std::ostream& out, truth_table const& f );
std::string to_tt_string( truth_table const& f );
void write_truth_table_file( std::string const& path, truth_table const& f );

circuit read_circuit( std::istream& in );
circuit read_circuit( std::string_view text );
circuit read_circuit_file( std::string const& path );

void write_circuit( std::ostream& out, circuit const& c );
std::string to_rc_string( circuit const& c );
void write_circuit_file( std::string const& path, circuit const& c );

} // namespace revsyn
