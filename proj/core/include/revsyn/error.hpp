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
  \file error.hpp
  \brief Error codes and exception types shared by all components
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace revsyn
{

enum class errc
{
  length_mismatch,
  output_overflow,
  index_out_of_range,
  bad_variable,
  not_reversible,
  size_mismatch,
  syntax_error,
  line_index_out_of_range,
  duplicate_control,
  unsupported_n,
  unsupported_size,
  arity_mismatch
};

char const* to_string( errc code );

/*! \brief Exception carrying a machine-checkable error code. */
class error : public std::runtime_error
{
public:
  error( errc code, std::string const& what )
      : std::runtime_error( what ), code_( code ) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

/*! \brief Parse failure with the 1-based source line it occurred on. */
class parse_error : public error
{
public:
  parse_error( errc code, uint32_t line, std::string const& what )
      : error( code, "line " + std::to_string( line ) + ": " + what ),
        line_( line ) {}

  uint32_t line() const noexcept { return line_; }

private:
  uint32_t line_;
};

} // namespace revsyn
