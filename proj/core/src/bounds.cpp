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

#include "revsyn/bounds.hpp"

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "revsyn/bits.hpp"

namespace revsyn
{

namespace
{

constexpr mpfr_prec_t interval_precision = 128;

struct mpfr_value
{
  mpfr_value() { mpfr_init2( value, interval_precision ); }
  ~mpfr_value() { mpfr_clear( value ); }
  mpfr_value( mpfr_value const& ) = delete;
  mpfr_value& operator=( mpfr_value const& ) = delete;

  mpfr_t value;
};

mpz_class states_factorial( uint32_t n )
{
  mpz_class f;
  mpz_fac_ui( f.get_mpz_t(), 1ul << n );
  return f;
}

/* Certified interval [lo, hi] enclosing log2((2^n)!), via the log-gamma
 * function under directed rounding. */
void log2_states_factorial( uint32_t n, mpfr_value& lo, mpfr_value& hi )
{
  mpfr_value argument, gamma_lo, gamma_hi, ln2_lo, ln2_hi;
  mpfr_set_ui( argument.value, ( 1ul << n ) + 1, MPFR_RNDN ); /* exact */
  mpfr_lngamma( gamma_lo.value, argument.value, MPFR_RNDD );
  mpfr_lngamma( gamma_hi.value, argument.value, MPFR_RNDU );
  mpfr_const_log2( ln2_lo.value, MPFR_RNDD );
  mpfr_const_log2( ln2_hi.value, MPFR_RNDU );
  mpfr_div( lo.value, gamma_lo.value, ln2_hi.value, MPFR_RNDD );
  mpfr_div( hi.value, gamma_hi.value, ln2_lo.value, MPFR_RNDU );
}

uint64_t exact_lower_bound( uint32_t n )
{
  mpz_class const target = states_factorial( n );
  unsigned long const base = static_cast<unsigned long>( n ) << ( n - 1 );
  mpz_class power = 1;
  uint64_t k = 0;
  while ( power < target )
  {
    power *= base;
    ++k;
  }
  return k;
}

uint64_t interval_lower_bound( uint32_t n )
{
  mpfr_value num_lo, num_hi;
  log2_states_factorial( n, num_lo, num_hi );

  mpfr_value base, den_lo, den_hi;
  mpfr_set_ui( base.value, static_cast<unsigned long>( n ) << ( n - 1 ), MPFR_RNDN ); /* exact */
  mpfr_log2( den_lo.value, base.value, MPFR_RNDD );
  mpfr_log2( den_hi.value, base.value, MPFR_RNDU );

  mpfr_value ratio_lo, ratio_hi;
  mpfr_div( ratio_lo.value, num_lo.value, den_hi.value, MPFR_RNDD );
  mpfr_div( ratio_hi.value, num_hi.value, den_lo.value, MPFR_RNDU );

  mpfr_value ceil_lo, ceil_hi;
  mpfr_ceil( ceil_lo.value, ratio_lo.value );
  mpfr_ceil( ceil_hi.value, ratio_hi.value );

  /* If the interval straddles an integer, the lower end is the safe bound. */
  return mpfr_get_ui( ceil_lo.value, MPFR_RNDN );
}

} // namespace

bound_report lower_bound_toffoli( uint32_t n, bound_mode mode, bool allow_degenerate )
{
  if ( n == 0 || n > max_vars )
  {
    throw error( errc::unsupported_n, "supported range is 1 <= n <= " + std::to_string( max_vars ) );
  }
  if ( n == 1 )
  {
    /* log(n 2^(n-1)) vanishes; the single-line worst case is the one NOT. */
    if ( !allow_degenerate )
    {
      throw error( errc::unsupported_n, "the bound formula is undefined for n = 1" );
    }
    return bound_report{ 1, 1, true };
  }

  if ( mode == bound_mode::automatic )
  {
    mode = n <= 10 ? bound_mode::exact : bound_mode::interval;
  }
  if ( mode == bound_mode::exact )
  {
    if ( n > 10 )
    {
      throw error( errc::unsupported_n, "exact mode supported for n <= 10" );
    }
    return bound_report{ n, exact_lower_bound( n ), true };
  }
  return bound_report{ n, interval_lower_bound( n ), false };
}

bool check_induction_inequality( uint32_t n )
{
  if ( n == 0 || n > max_vars )
  {
    throw error( errc::unsupported_n, "supported range is 1 <= n <= " + std::to_string( max_vars ) );
  }

  /* log2((2^n)!) >= n 2^(n-1)  <=>  (2^n)! >= 2^(n 2^(n-1)), and comparing
   * against a power of two only needs the bit length. */
  uint64_t const threshold = static_cast<uint64_t>( n ) << ( n - 1 );
  auto const exact_check = [&]() {
    return static_cast<uint64_t>( mpz_sizeinbase( states_factorial( n ).get_mpz_t(), 2 ) ) >= threshold + 1;
  };

  if ( n <= 14 )
  {
    return exact_check();
  }

  mpfr_value lo, hi;
  log2_states_factorial( n, lo, hi );
  if ( mpfr_cmp_ui( lo.value, threshold ) >= 0 )
  {
    return true;
  }
  if ( mpfr_cmp_ui( hi.value, threshold ) < 0 )
  {
    return false;
  }
  return exact_check(); /* interval inconclusive */
}

} // namespace revsyn
