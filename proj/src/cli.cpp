/* polysynth: polymorphic logic synthesis by bi-decomposition
 * Copyright (C) 2026  polysynth contributors
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

#include <polysynth/cli.hpp>

#include <polysynth/bench.hpp>
#include <polysynth/errors.hpp>
#include <polysynth/flow.hpp>
#include <polysynth/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <new>
#include <ostream>
#include <sstream>

namespace polysynth
{

namespace
{

struct spec_sources
{
  std::string gen1, gen2, pla1, pla2;
  bool reverse_outputs{ false };
};

struct limits
{
  std::size_t max_cells{ 5'000'000u };
  std::size_t max_depth{ 100'000u };
  bool g2_distinct{ false };
};

struct verify_flags
{
  unsigned exhaustive_limit{ 14u };
  std::uint64_t samples{ 1u << 16 };
  std::uint64_t seed{ 1u };
};

void add_source_options( CLI::App& app, spec_sources& s )
{
  app.add_option( "--gen1", s.gen1, "mode-1 generator (parity:N, majority:N, mul:AxB, sort:K, pla:PATH)" );
  app.add_option( "--gen2", s.gen2, "mode-2 generator" );
  app.add_option( "--pla1", s.pla1, "mode-1 PLA file" );
  app.add_option( "--pla2", s.pla2, "mode-2 PLA file" );
  app.add_flag( "--reverse-outputs", s.reverse_outputs, "reverse the output order of the mode-2 specification" );
}

void add_limit_options( CLI::App& app, limits& l )
{
  app.add_option( "--max-cells", l.max_cells, "cell cap per output netlist" )->check( CLI::PositiveNumber );
  app.add_option( "--max-depth", l.max_depth, "recursion cap" )->check( CLI::PositiveNumber );
  app.add_flag( "--g2-distinct", l.g2_distinct, "never pair a gate with itself in polymorphic decomposition" );
}

void add_verify_options( CLI::App& app, verify_flags& v )
{
  app.add_option( "--exhaustive-limit", v.exhaustive_limit, "largest input count verified exhaustively" );
  app.add_option( "--samples", v.samples, "random assignments above the exhaustive limit" );
  app.add_option( "--seed", v.seed, "seed for sampled verification" );
}

std::string pick_source( std::string const& gen, std::string const& pla, char const* mode )
{
  if ( !gen.empty() && !pla.empty() )
  {
    throw spec_error( std::string( "give either --gen" ) + mode + " or --pla" + mode + ", not both" );
  }
  if ( gen.empty() && pla.empty() )
  {
    throw spec_error( std::string( "missing specification for mode " ) + mode + " (--gen" + mode + " or --pla" +
                      mode + ")" );
  }
  return gen.empty() ? "pla:" + pla : gen;
}

struct loaded_spec
{
  spec_set mode1, mode2;
  std::vector<poly_function> functions;
};

loaded_spec load_pair( std::string const& d1, std::string const& d2, bool reverse_outputs )
{
  loaded_spec s{ load_spec( d1 ), load_spec( d2 ), {} };
  if ( reverse_outputs )
  {
    std::reverse( s.mode2.outputs.begin(), s.mode2.outputs.end() );
    std::reverse( s.mode2.output_names.begin(), s.mode2.output_names.end() );
  }
  s.functions = make_poly_spec( s.mode1, s.mode2 );
  return s;
}

loaded_spec load_pair( spec_sources const& src )
{
  return load_pair( pick_source( src.gen1, src.pla1, "1" ), pick_source( src.gen2, src.pla2, "2" ),
                    src.reverse_outputs );
}

std::vector<std::string> output_names( loaded_spec const& s )
{
  std::vector<std::string> names;
  for ( std::size_t o = 0; o < s.mode1.output_names.size(); ++o )
  {
    auto const& a = s.mode1.output_names[o];
    auto const& b = s.mode2.output_names[o];
    names.push_back( a == b ? a : a + "/" + b );
  }
  return names;
}

poly_options to_poly_options( limits const& l )
{
  return poly_options{ l.g2_distinct, l.max_cells, l.max_depth };
}

verify_options to_verify_options( verify_flags const& v )
{
  return verify_options{ v.exhaustive_limit, v.samples, v.seed };
}

std::string format_percent( double p )
{
  char buf[32];
  std::snprintf( buf, sizeof( buf ), "%.1f", p );
  return buf;
}

std::string stats_line( netlist const& n )
{
  auto const s = compute_gate_stats( n );
  return "total=" + std::to_string( s.total_counted ) + " poly=" + std::to_string( s.poly_count ) +
         " percent=" + format_percent( s.poly_percent );
}

void write_file( std::string const& path, std::string const& content )
{
  std::ofstream f( path, std::ios::binary );
  if ( !f )
  {
    throw spec_error( "cannot write '" + path + "'" );
  }
  f << content;
  if ( !f )
  {
    throw spec_error( "error while writing '" + path + "'" );
  }
}

std::string read_file( std::string const& path )
{
  std::ifstream f( path, std::ios::binary );
  if ( !f )
  {
    throw spec_error( "cannot open '" + path + "'" );
  }
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void print_counterexample( std::ostream& out, netlist const& n, counterexample const& c )
{
  out << "FAIL output=" << n.outputs[c.output].name << " mode=" << c.mode << " assignment=";
  for ( std::size_t i = 0; i < c.assignment.size(); ++i )
    out << ( i ? "," : "" ) << n.inputs[i] << "=" << ( c.assignment[i] ? 1 : 0 );
  out << " expected=" << ( c.expected ? 1 : 0 ) << " actual=" << ( c.actual ? 1 : 0 ) << "\n";
}

std::string csv_field( std::string const& s )
{
  if ( s.find_first_of( ",\"\n" ) == std::string::npos )
    return s;
  std::string r = "\"";
  for ( auto ch : s )
  {
    if ( ch == '"' )
      r += '"';
    r += ch;
  }
  return r + "\"";
}

std::string file_stem( std::string const& s )
{
  std::string r;
  for ( auto ch : s )
    r += ( std::isalnum( static_cast<unsigned char>( ch ) ) || ch == '-' || ch == '_' ) ? ch : '_';
  return r;
}

published_reference ref( unsigned gates, std::string bracket )
{
  return published_reference{ gates, std::move( bracket ) };
}

/* ----- subcommands ----- */

int cmd_synth( std::string const& method_text, spec_sources const& src, limits const& lim, std::string const& out_path,
               std::string const& dot_path, std::ostream& out, std::ostream& err )
{
  auto const method = parse_method( method_text );
  if ( !method )
  {
    throw spec_error( "unknown method '" + method_text + "' (poly-bidec or xform-bidec)" );
  }
  auto const spec = load_pair( src );
  auto result = synthesize( spec.functions, output_names( spec ), *method, to_poly_options( lim ) );
  result.net.mode_labels = { spec.mode1.name, spec.mode2.name };
  auto const json = to_json( result.net );
  if ( out_path.empty() )
    out << json;
  else
    write_file( out_path, json );
  if ( !dot_path.empty() )
    write_file( dot_path, to_dot( result.net ) );
  ( out_path.empty() ? err : out ) << stats_line( result.net ) << "\n";
  return exit_ok;
}

int cmd_verify( std::string const& netlist_path, spec_sources const& src, verify_flags const& vf, std::ostream& out )
{
  auto const net = from_json( read_file( netlist_path ) );
  auto const spec = load_pair( src );
  auto const report = verify( net, spec.functions, to_verify_options( vf ) );
  if ( report.pass )
  {
    out << "PASS checks=" << report.checks << ( report.exhaustive ? " exhaustive" : " sampled" ) << "\n";
    return exit_ok;
  }
  print_counterexample( out, net, *report.failure );
  return exit_verify_failed;
}

int cmd_bench( std::string const& descriptor, std::string const& out_path, std::ostream& out )
{
  auto const s = load_spec( descriptor );
  auto const text = write_pla( s.outputs, s.output_names );
  if ( out_path.empty() )
    out << text;
  else
    write_file( out_path, text );
  return exit_ok;
}

struct compare_flags
{
  std::string suite{ "table2" };
  std::string out_path;
  std::string netlist_dir;
  std::string mcnc_dir{ "tests/data/mcnc" };
  std::vector<std::string> methods{ "poly-bidec", "xform-bidec" };
  bool no_timing{ false };
  bool reverse_outputs{ false };
};

int cmd_compare( compare_flags const& cf, limits const& lim, verify_flags const& vf, std::ostream& out,
                 std::ostream& err )
{
  std::vector<synthesis_method> methods;
  for ( auto const& m : cf.methods )
  {
    auto const parsed = parse_method( m );
    if ( !parsed )
      throw spec_error( "unknown method '" + m + "'" );
    methods.push_back( *parsed );
  }
  auto const entries = resolve_suite( cf.suite, cf.mcnc_dir );

  std::ostringstream csv;
  csv << "benchmark,method,gates,poly_gates,poly_percent,wall_ms,paper_ref_gates,paper_ref_bracket,status\n";
  int code = exit_ok;
  for ( auto const& e : entries )
  {
    std::optional<loaded_spec> spec;
    std::string load_error;
    try
    {
      spec = load_pair( e.mode1, e.mode2, cf.reverse_outputs );
    }
    catch ( spec_error const& ex )
    {
      load_error = ex.what();
    }
    for ( auto m : methods )
    {
      auto const& r = m == synthesis_method::poly_bidec ? e.poly_ref : e.xform_ref;
      auto const ref_gates = r.gates ? std::to_string( *r.gates ) : std::string{};
      auto row_prefix = csv_field( e.benchmark ) + "," + method_name( m ) + ",";
      auto row_suffix = "," + ref_gates + "," + csv_field( r.bracket ) + ",";
      if ( !spec )
      {
        err << e.benchmark << ": " << load_error << "\n";
        csv << row_prefix << ",,,," << row_suffix.substr( 1 ) << "ERROR\n";
        code = std::max<int>( code, exit_verify_failed );
        continue;
      }
      try
      {
        auto const t0 = std::chrono::steady_clock::now();
        auto result = synthesize( spec->functions, output_names( *spec ), m, to_poly_options( lim ) );
        auto const t1 = std::chrono::steady_clock::now();
        result.net.mode_labels = { spec->mode1.name, spec->mode2.name };
        auto const report = verify( result.net, spec->functions, to_verify_options( vf ) );
        auto const wall =
            cf.no_timing ? std::string( "0" )
                         : std::to_string( static_cast<long long>(
                               std::chrono::duration<double, std::milli>( t1 - t0 ).count() + 0.5 ) );
        if ( !report.pass )
        {
          err << e.benchmark << " (" << method_name( m ) << "): verification failed\n";
          csv << row_prefix << ",,," << wall << row_suffix << "FAILED\n";
          code = std::max<int>( code, exit_verify_failed );
          continue;
        }
        auto const s = compute_gate_stats( result.net );
        csv << row_prefix << s.total_counted << "," << s.poly_count << "," << format_percent( s.poly_percent ) << ","
            << wall << row_suffix << "ok\n";
        if ( !cf.netlist_dir.empty() )
          write_file( cf.netlist_dir + "/" + file_stem( e.benchmark ) + "." + method_name( m ) + ".json",
                      to_json( result.net ) );
      }
      catch ( resource_error const& ex )
      {
        err << e.benchmark << " (" << method_name( m ) << "): " << ex.what() << "\n";
        csv << row_prefix << ",,,," << row_suffix.substr( 1 ) << "FAILED\n";
        code = std::max<int>( code, exit_verify_failed );
      }
    }
  }
  if ( cf.out_path.empty() )
    out << csv.str();
  else
    write_file( cf.out_path, csv.str() );
  return code;
}

} // namespace

std::vector<suite_entry> resolve_suite( std::string const& suite, std::string const& mcnc_dir )
{
  auto pla = [&mcnc_dir]( std::string const& name ) { return "pla:" + mcnc_dir + "/" + name + ".pla"; };
  if ( suite == "table2" )
  {
    return {
        { "2x3mul/sort5", "mul:2x3", "sort:5", ref( 49, "8.6%" ), ref( 65, "20.0%" ) },
        { "3x3mul/sort6", "mul:3x3", "sort:6", ref( 145, "35.8%" ), ref( 170, "22.3%" ) },
        { "3x4mul/sort7", "mul:3x4", "sort:7", ref( 248, "27.0%" ), ref( 263, "11.0%" ) },
        { "4x4mul/sort8", "mul:4x4", "sort:8", ref( 570, "43.8%" ), ref( 630, "13.5%" ) },
        { "5x5mul/sort10", "mul:5x5", "sort:10", ref( 2507, "36.5%" ), ref( 2667, "7.7%" ) },
        { "6x6mul/sort12", "mul:6x6", "sort:12", ref( 10130, "25.1%" ), ref( 10329, "5.1%" ) },
    };
  }
  if ( suite == "table3" )
  {
    return {
        { "parity7/majority7", "parity:7", "majority:7", ref( 41, "1" ), ref( 64, "5" ) },
        { "parity9/majority9", "parity:9", "majority:9", ref( 59, "2" ), ref( 71, "2" ) },
        { "parity11/majority11", "parity:11", "majority:11", ref( 90, "1" ), ref( 181, "5" ) },
        { "parity13/majority13", "parity:13", "majority:13", ref( 128, "2" ), ref( 144, "2" ) },
        { "parity15/majority15", "parity:15", "majority:15", ref( 186, "1" ), ref( 999, "126" ) },
    };
  }
  if ( suite == "table4" )
  {
    return {
        { "majority10/sao2@3", "majority:10", pla( "sao2" ) + "@3", ref( 206, "10.6%" ), ref( 208, "5.7%" ) },
        { "parity10/sao2@3", "parity:10", pla( "sao2" ) + "@3", ref( 54, "40.7%" ), ref( 119, "11.7%" ) },
        { "4x4mul/f51m", "mul:4x4", pla( "f51m" ), ref( 354, "16.1%" ), ref( 375, "5.3%" ) },
        { "sort8/f51m", "sort:8", pla( "f51m" ), ref( 175, "25.1%" ), ref( 235, "8.0%" ) },
        { "ex1010/sort10", pla( "ex1010" ), "sort:10", ref( 2789, "23.8%" ), ref( 3022, "6.1%" ) },
        { "5xp1/z5xp1", pla( "5xp1" ), pla( "z5xp1" ), ref( 98, "60.2%" ), ref( 152, "13.8%" ) },
        { "5x5mul/ex1010", "mul:5x5", pla( "ex1010" ), ref( 3587, "40.2%" ), ref( 3716, "9.1%" ) },
        { "misex3/misex3c", pla( "misex3" ), pla( "misex3c" ), ref( 4571, "48.5%" ), ref( 4682, "7.5%" ) },
    };
  }
  if ( suite == "trend" )
  {
    return {
        { "2x3mul/sort5", "mul:2x3", "sort:5", ref( 49, "8.6%" ), ref( 65, "20.0%" ) },
        { "3x3mul/sort6", "mul:3x3", "sort:6", ref( 145, "35.8%" ), ref( 170, "22.3%" ) },
        { "4x4mul/sort8", "mul:4x4", "sort:8", ref( 570, "43.8%" ), ref( 630, "13.5%" ) },
        { "parity10/majority10", "parity:10", "majority:10", {}, {} },
        { "4x4mul/sorting-net8", "mul:4x4", "sort:8", ref( 570, "43.8%" ), ref( 630, "13.5%" ) },
    };
  }

  std::vector<suite_entry> out;
  std::stringstream list( suite );
  std::string item;
  while ( std::getline( list, item, ',' ) )
  {
    auto const slash = item.find( '/' );
    if ( item.empty() || slash == std::string::npos || item.find( '/', slash + 1u ) != std::string::npos )
    {
      throw spec_error( "malformed suite entry '" + item + "' (expected GEN1/GEN2)" );
    }
    out.push_back( suite_entry{ item, item.substr( 0, slash ), item.substr( slash + 1u ), {}, {} } );
  }
  if ( out.empty() )
  {
    throw spec_error( "empty suite" );
  }
  return out;
}

int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "polysynth: synthesis of polymorphic circuits by bi-decomposition", "polysynth" };
  app.require_subcommand( 1 );

  spec_sources src;
  limits lim;
  verify_flags vf;

  auto* synth = app.add_subcommand( "synth", "synthesize a two-mode specification into a netlist" );
  std::string method = "poly-bidec", out_path, dot_path;
  synth->add_option( "--method", method, "poly-bidec or xform-bidec" );
  synth->add_option( "--out", out_path, "netlist JSON output (stdout if omitted)" );
  synth->add_option( "--dot", dot_path, "also write a DOT rendering" );
  add_source_options( *synth, src );
  add_limit_options( *synth, lim );

  auto* verify_cmd = app.add_subcommand( "verify", "check a netlist against a two-mode specification" );
  std::string netlist_path;
  verify_cmd->add_option( "--netlist", netlist_path, "netlist JSON" )->required();
  add_source_options( *verify_cmd, src );
  add_verify_options( *verify_cmd, vf );

  auto* bench = app.add_subcommand( "bench", "write a generated benchmark as a PLA file" );
  std::string descriptor, bench_out;
  bench->add_option( "descriptor", descriptor, "parity:N, majority:N, mul:AxB, sort:K" )->required();
  bench->add_option( "--out", bench_out, "PLA output (stdout if omitted)" );

  auto* compare = app.add_subcommand( "compare", "run both methods on a suite and report CSV" );
  compare_flags cf;
  compare->add_option( "--suite", cf.suite, "table2, table3, table4, trend, or GEN1/GEN2[,GEN1/GEN2...]" );
  compare->add_option( "--out", cf.out_path, "CSV output (stdout if omitted)" );
  compare->add_option( "--netlist-dir", cf.netlist_dir, "directory receiving one netlist JSON per row" );
  compare->add_option( "--mcnc-dir", cf.mcnc_dir, "directory holding the MCNC PLA files" );
  compare->add_option( "--methods", cf.methods, "subset of poly-bidec, xform-bidec" )->delimiter( ',' );
  compare->add_flag( "--no-timing", cf.no_timing, "write 0 in the wall_ms column" );
  compare->add_flag( "--reverse-outputs", cf.reverse_outputs, "reverse the output order of every mode-2 spec" );
  add_limit_options( *compare, lim );
  add_verify_options( *compare, vf );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_spec_error;
  }

  if ( auto const* threads = std::getenv( "POLYSYNTH_THREADS" ) )
  {
    set_thread_limit( static_cast<unsigned>( std::strtoul( threads, nullptr, 10 ) ) );
  }

  try
  {
    if ( synth->parsed() )
      return cmd_synth( method, src, lim, out_path, dot_path, out, err );
    if ( verify_cmd->parsed() )
      return cmd_verify( netlist_path, src, vf, out );
    if ( bench->parsed() )
      return cmd_bench( descriptor, bench_out, out );
    return cmd_compare( cf, lim, vf, out, err );
  }
  catch ( resource_error const& e )
  {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource;
  }
  catch ( spec_error const& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_spec_error;
  }
  catch ( std::invalid_argument const& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_spec_error;
  }
  catch ( std::bad_alloc const& )
  {
    err << "resource limit: out of memory\n";
    return exit_resource;
  }
  catch ( std::exception const& e )
  {
    err << "internal error: " << e.what() << "\n";
    return exit_resource;
  }
}

} // namespace polysynth
