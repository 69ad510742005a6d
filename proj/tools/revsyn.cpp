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
  \file revsyn.cpp
  \brief Command-line front-end

  Exit codes: 0 = success (and, for checks, a positive answer), 1 = a check
  ran cleanly but answered "no" (verify: not-equal, halfv check: not
  realizable), 2 = operational error.  Machine-readable results go to
  standard output, diagnostics to standard error.
*/

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <revsyn/revsyn.hpp>

namespace
{

using namespace revsyn;

bool has_suffix( std::string const& text, std::string const& suffix )
{
  return text.size() >= suffix.size() &&
         text.compare( text.size() - suffix.size(), suffix.size(), suffix ) == 0;
}

permutation load_permutation( std::string const& path )
{
  if ( has_suffix( path, ".rc" ) )
  {
    return circuit_to_permutation( read_circuit_file( path ) );
  }
  return permutation::from_truth_table( read_truth_table_file( path ) );
}

std::string state_bits( uint32_t state, uint32_t num_lines )
{
  std::string out( num_lines, '0' );
  for ( uint32_t l = 1; l <= num_lines; ++l )
  {
    out[l - 1] = line_bit( state, num_lines, l ) ? '1' : '0';
  }
  return out;
}

std::vector<uint32_t> parse_order( std::string const& text, uint32_t num_lines )
{
  std::vector<uint32_t> order;
  std::istringstream stream( text );
  std::string item;
  while ( std::getline( stream, item, ',' ) )
  {
    order.push_back( static_cast<uint32_t>( std::stoul( item ) ) );
  }
  if ( order.empty() )
  {
    for ( uint32_t i = 1; i <= num_lines; ++i )
    {
      order.push_back( i );
    }
  }
  return order;
}

esop_method parse_method( std::string const& name )
{
  if ( name == "pprm" )
  {
    return esop_method::pprm;
  }
  if ( name == "esop" )
  {
    return esop_method::esop_greedy;
  }
  throw error( errc::syntax_error, "unknown mapping method '" + name + "' (use pprm or esop)" );
}

std::ofstream open_output( std::string const& path )
{
  std::ofstream stream( path );
  if ( !stream )
  {
    throw std::runtime_error( "cannot open '" + path + "' for writing" );
  }
  return stream;
}

/* ------------------------------------------------------------------ */

struct synth_options
{
  std::string input;
  std::string out;
  std::string order;
  std::string to_toffoli;
};

int run_synth( synth_options const& opt )
{
  auto const f = permutation::from_truth_table( read_truth_table_file( opt.input ) );
  auto const order = parse_order( opt.order, f.num_lines() );
  auto const c = young_subgroup_synthesis( f, order );
  std::cout << "stg-gates " << c.num_gates() << "\n";

  circuit const* to_write = &c;
  std::optional<circuit> mapped;
  if ( !opt.to_toffoli.empty() )
  {
    mapped = map_to_toffoli( c, parse_method( opt.to_toffoli ) );
    std::cout << "toffoli-gates " << mapped->num_gates() << "\n";
    to_write = &*mapped;
  }
  if ( !opt.out.empty() )
  {
    write_circuit_file( opt.out, *to_write );
  }
  else
  {
    write_circuit( std::cout, *to_write );
  }
  return 0;
}

int run_verify( std::string const& path_a, std::string const& path_b )
{
  auto const a = load_permutation( path_a );
  auto const b = load_permutation( path_b );
  if ( a.num_lines() != b.num_lines() )
  {
    throw error( errc::size_mismatch, "operands have different line counts" );
  }
  for ( uint32_t s = 0; s < a.size(); ++s )
  {
    if ( a[s] != b[s] )
    {
      std::cout << "not-equal input=" << state_bits( s, a.num_lines() )
                << " a=" << state_bits( a[s], a.num_lines() )
                << " b=" << state_bits( b[s], b.num_lines() ) << "\n";
      return 1;
    }
  }
  std::cout << "equal\n";
  return 0;
}

int run_map( std::string const& input, std::string const& method, std::string const& out )
{
  auto const mapped = map_to_toffoli( read_circuit_file( input ), parse_method( method ) );
  std::cout << "toffoli-gates " << mapped.num_gates() << "\n";
  if ( !out.empty() )
  {
    write_circuit_file( out, mapped );
  }
  else
  {
    write_circuit( std::cout, mapped );
  }
  return 0;
}

int run_sim( std::string const& input, std::string const& bits )
{
  auto const c = read_circuit_file( input );
  if ( bits.size() != c.num_lines() )
  {
    throw error( errc::size_mismatch,
                 "input has " + std::to_string( bits.size() ) + " bits, circuit has " +
                     std::to_string( c.num_lines() ) + " lines" );
  }
  uint32_t state = 0;
  for ( auto const ch : bits )
  {
    if ( ch != '0' && ch != '1' )
    {
      throw error( errc::syntax_error, "input must be a 0/1 string" );
    }
    state = ( state << 1 ) | ( ch == '1' ? 1u : 0u );
  }
  std::cout << state_bits( simulate( c, state ), c.num_lines() ) << "\n";
  return 0;
}

int run_bounds( uint32_t n_max, std::string const& csv_path )
{
  std::ostringstream csv;
  csv << "n,lower_bound,method,induction\n";

  std::cout << std::left << std::setw( 4 ) << "n" << std::setw( 14 ) << "lower-bound"
            << std::setw( 10 ) << "method" << "induction\n";
  for ( uint32_t n = 2; n <= n_max; ++n )
  {
    auto const report = lower_bound_toffoli( n );
    bool const induction = check_induction_inequality( n );
    char const* method = report.exact ? "exact" : "interval";
    char const* status = induction ? "ok" : "violated";
    std::cout << std::left << std::setw( 4 ) << n << std::setw( 14 ) << report.lower_bound
              << std::setw( 10 ) << method << status << "\n";
    csv << n << ',' << report.lower_bound << ',' << method << ',' << status << '\n';
  }
  if ( !csv_path.empty() )
  {
    open_output( csv_path ) << csv.str();
  }
  return 0;
}

struct census_cli_options
{
  uint32_t n = 0;
  bool exhaustive = false;
  uint64_t samples = 10000;
  uint64_t seed = 1;
  uint32_t threads = 1;
  std::string csv_path;
};

template<typename Key>
void print_histogram( std::ostream& out, std::string const& name, std::map<Key, uint64_t> const& hist )
{
  out << name << ":\n";
  for ( auto const& [value, count] : hist )
  {
    out << "  " << std::left << std::setw( 10 ) << value << count << "\n";
  }
}

template<typename Key>
void csv_histogram( std::ostream& out, std::string const& name, std::map<Key, uint64_t> const& hist )
{
  for ( auto const& [value, count] : hist )
  {
    out << name << ',' << value << ',' << count << '\n';
  }
}

int run_census( census_cli_options const& opt )
{
  census_options options;
  options.exhaustive = opt.exhaustive;
  options.samples = opt.samples;
  options.seed = opt.seed;
  options.threads = opt.threads;

  auto const result = census( opt.n, options );

  std::cout << "census n=" << result.n << ( result.exhaustive ? " exhaustive" : " sampled" )
            << " functions=" << result.function_count;
  if ( !result.exhaustive )
  {
    std::cout << " seed=" << opt.seed;
  }
  std::cout << "\n";
  print_histogram( std::cout, "stg-count", result.stg_count_histogram );
  print_histogram( std::cout, "max-pprm-terms", result.max_pprm_terms_histogram );
  print_histogram( std::cout, "max-esop-terms", result.max_esop_terms_histogram );
  print_histogram( std::cout, "toffoli-pprm", result.toffoli_pprm_histogram );
  print_histogram( std::cout, "toffoli-esop", result.toffoli_esop_histogram );

  if ( !opt.csv_path.empty() )
  {
    auto stream = open_output( opt.csv_path );
    stream << "metric,value,count\n";
    csv_histogram( stream, "stg_count", result.stg_count_histogram );
    csv_histogram( stream, "max_pprm_terms", result.max_pprm_terms_histogram );
    csv_histogram( stream, "max_esop_terms", result.max_esop_terms_histogram );
    csv_histogram( stream, "toffoli_pprm", result.toffoli_pprm_histogram );
    csv_histogram( stream, "toffoli_esop", result.toffoli_esop_histogram );
  }
  return 0;
}

int run_halfv_check( std::string const& input, uint32_t gates, std::string const& out )
{
  auto const p = load_permutation( input );
  uint32_t const n = gates == 0 ? p.num_lines() : gates;
  auto const result = recognize_half_v( p, n );
  if ( !result.ok() )
  {
    auto const& w = *result.failure;
    std::cout << "not realizable (gate " << w.gate_index << ", inputs "
              << state_bits( w.input_a, p.num_lines() ) << " "
              << state_bits( w.input_b, p.num_lines() ) << ")\n";
    return 1;
  }
  std::cout << "realizable\n";
  if ( !out.empty() )
  {
    write_half_v_file( out, *result.circuit );
  }
  return 0;
}

int run_halfv_encode( std::string const& input, uint32_t k, std::string const& out )
{
  auto const f = read_truth_table_file( input );
  uint32_t const num_lines = k == 0 ? f.num_inputs() + 1 : k;
  auto const h = encode( f, num_lines );
  if ( !out.empty() )
  {
    write_half_v_file( out, h );
  }
  else
  {
    write_half_v( std::cout, h );
  }
  return 0;
}

int run_halfv_decode( std::string const& input, std::string const& out )
{
  auto const f = decode( read_half_v_file( input ) );
  if ( !out.empty() )
  {
    write_truth_table_file( out, f );
  }
  else
  {
    write_truth_table( std::cout, f );
  }
  return 0;
}

int run_halfv_enumerate( uint32_t n, uint32_t k )
{
  uint64_t const count = enumerate_half_v( n, k );
  uint64_t expected = 1;
  for ( uint32_t i = 0; i < n; ++i )
  {
    expected *= uint64_t{ 1 } << ( 1u << ( k - 1 ) );
  }
  std::cout << count << " = " << expected << ( count == expected ? " ok" : " MISMATCH" ) << "\n";
  return count == expected ? 0 : 1;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "reversible logic synthesis and circuit complexity workbench" };
  app.set_version_flag( "--version", "revsyn 1.0.0" );
  app.require_subcommand( 1 );

  synth_options synth_opt;
  auto* synth = app.add_subcommand( "synth", "synthesize a reversible .tt into single-target gates" );
  synth->add_option( "input", synth_opt.input, ".tt file" )->required();
  synth->add_option( "--order", synth_opt.order, "comma-separated variable order (default 1,2,...,n)" );
  synth->add_option( "--to-toffoli", synth_opt.to_toffoli, "also map to Toffoli gates: pprm or esop" );
  synth->add_option( "--out", synth_opt.out, "output .rc file (default: standard output)" );

  std::string verify_a, verify_b;
  auto* verify = app.add_subcommand( "verify", "compare two circuits/tables extensionally" );
  verify->add_option( "a", verify_a, ".rc or .tt file" )->required();
  verify->add_option( "b", verify_b, ".rc or .tt file" )->required();

  std::string map_input, map_method{ "pprm" }, map_out;
  auto* map = app.add_subcommand( "map", "map single-target gates to Toffoli cascades" );
  map->add_option( "input", map_input, ".rc file" )->required();
  map->add_option( "--method", map_method, "pprm or esop (default pprm)" );
  map->add_option( "--out", map_out, "output .rc file (default: standard output)" );

  std::string sim_input, sim_bits;
  auto* sim = app.add_subcommand( "sim", "evaluate a circuit on a binary input string" );
  sim->add_option( "input", sim_input, ".rc file" )->required();
  sim->add_option( "bits", sim_bits, "input assignment, x1 first" )->required();

  uint32_t bounds_n_max = 10;
  std::string bounds_csv;
  auto* bounds = app.add_subcommand( "bounds", "Toffoli lower bounds and the induction inequality" );
  bounds->add_option( "--n-max", bounds_n_max, "largest n (default 10)" )->check( CLI::Range( 2u, max_vars ) );
  bounds->add_option( "--csv", bounds_csv, "also write CSV (columns: n,lower_bound,method,induction)" );

  census_cli_options census_opt;
  auto* census_cmd = app.add_subcommand( "census", "complexity distributions over reversible functions" );
  census_cmd->add_option( "--n", census_opt.n, "line count" )->required()->check( CLI::Range( 1u, 8u ) );
  auto* exhaustive_flag = census_cmd->add_flag( "--exhaustive", census_opt.exhaustive, "all (2^n)! functions (n <= 3)" );
  census_cmd->add_option( "--samples", census_opt.samples, "sample count (default 10000)" )->excludes( exhaustive_flag );
  census_cmd->add_option( "--seed", census_opt.seed, "sampling seed (default 1)" );
  census_cmd->add_option( "--threads", census_opt.threads, "worker cap (default 1)" )->check( CLI::Range( 1u, 64u ) );
  census_cmd->add_option( "--csv", census_opt.csv_path, "also write CSV (columns: metric,value,count)" );

  auto* halfv = app.add_subcommand( "halfv", "half-V-shape circuits and the line-saving embedding" );
  halfv->require_subcommand( 1 );

  std::string check_input, check_out;
  uint32_t check_gates = 0;
  auto* check = halfv->add_subcommand( "check", "extract the canonical half-V form of a permutation" );
  check->add_option( "input", check_input, ".tt (or .rc) file" )->required();
  check->add_option( "--gates", check_gates, "gate count n (default: the line count)" );
  check->add_option( "--out", check_out, "write the recognized circuit as .rc" );

  std::string encode_input, encode_out;
  uint32_t encode_k = 0;
  auto* encode_cmd = halfv->add_subcommand( "encode", "embed a multiple-output .tt as a half-V circuit" );
  encode_cmd->add_option( "input", encode_input, ".tt file with k-1 inputs and n <= k outputs" )->required();
  encode_cmd->add_option( "--k", encode_k, "line count (default: inputs + 1)" );
  encode_cmd->add_option( "--out", encode_out, "output .rc file (default: standard output)" );

  std::string decode_input, decode_out;
  auto* decode_cmd = halfv->add_subcommand( "decode", "recover the embedded multiple-output function" );
  decode_cmd->add_option( "input", decode_input, "half-V .rc file" )->required();
  decode_cmd->add_option( "--out", decode_out, "output .tt file (default: standard output)" );

  uint32_t enum_n = 0, enum_k = 0;
  auto* enumerate_cmd = halfv->add_subcommand( "enumerate", "count distinct half-V permutations" );
  enumerate_cmd->add_option( "--n", enum_n, "gate count" )->required();
  enumerate_cmd->add_option( "--k", enum_k, "line count" )->required();

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( *synth )
    {
      return run_synth( synth_opt );
    }
    if ( *verify )
    {
      return run_verify( verify_a, verify_b );
    }
    if ( *map )
    {
      return run_map( map_input, map_method, map_out );
    }
    if ( *sim )
    {
      return run_sim( sim_input, sim_bits );
    }
    if ( *bounds )
    {
      return run_bounds( bounds_n_max, bounds_csv );
    }
    if ( *census_cmd )
    {
      return run_census( census_opt );
    }
    if ( *check )
    {
      return run_halfv_check( check_input, check_gates, check_out );
    }
    if ( *encode_cmd )
    {
      return run_halfv_encode( encode_input, encode_k, encode_out );
    }
    if ( *decode_cmd )
    {
      return run_halfv_decode( decode_input, decode_out );
    }
    if ( *enumerate_cmd )
    {
      return run_halfv_enumerate( enum_n, enum_k );
    }
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
