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
  \file census.hpp
  \brief Complexity profiles of synthesized circuits and their distributions

  A profile measures one reversible function by synthesizing it into
  single-target gates and expanding every control function through both ESOP
  routes; the censuses aggregate these profiles over all (or sampled)
  reversible functions.  The distributions are reported raw: which cost
  classes they fall into is left to interpretation.
*/

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace revsyn
{

struct complexity_profile
{
  uint32_t stg_count = 0;                 /*!< synthesized single-target gates */
  std::vector<uint32_t> pprm_terms;       /*!< per-gate PPRM cube counts */
  std::vector<uint32_t> esop_terms;       /*!< per-gate greedy-ESOP cube counts */
  uint64_t toffoli_count_pprm = 0;        /*!< sum of pprm_terms */
  uint64_t toffoli_count_esop = 0;        /*!< sum of esop_terms */

  bool operator==( complexity_profile const& other ) const = default;
};

/*! \brief Synthesizes \p f and fills the profile. */
complexity_profile classify( permutation const& f );

struct census_options
{
  bool exhaustive = false;  /*!< all (2^n)! functions; requires n <= 3 */
  uint64_t samples = 10000; /*!< seeded sample count otherwise */
  uint64_t seed = 1;
  uint32_t threads = 1;
};

struct census_result
{
  uint32_t n = 0;
  bool exhaustive = false;
  uint64_t function_count = 0;
  std::map<uint32_t, uint64_t> stg_count_histogram;
  std::map<uint32_t, uint64_t> max_pprm_terms_histogram; /*!< per-function max over gates */
  std::map<uint32_t, uint64_t> max_esop_terms_histogram;
  std::map<uint64_t, uint64_t> toffoli_pprm_histogram;   /*!< per-function totals */
  std::map<uint64_t, uint64_t> toffoli_esop_histogram;
};

/*! \brief Aggregates profiles over reversible functions on \p n lines.
 *
 * Exhaustive mode enumerates all (2^n)! functions (n <= 3); sampling mode
 * draws seeded random permutations, each sample from its own deterministic
 * stream, so the result does not depend on the thread count.
 */
census_result census( uint32_t n, census_options const& options );

} // namespace revsyn
