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

#include <doctest.h>

#include <polysynth/bench.hpp>
#include <polysynth/cli.hpp>
#include <polysynth/netlist.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polysynth;
namespace fs = std::filesystem;

namespace
{

struct run_result
{
  int code;
  std::string out;
  std::string err;
};

run_result run( std::vector<std::string> const& args )
{
  std::ostringstream out, err;
  auto const code = run_cli( args, out, err );
  return { code, out.str(), err.str() };
}

std::string slurp( fs::path const& p )
{
  std::ifstream in( p, std::ios::binary );
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct temp_dir
{
  fs::path path;
  explicit temp_dir( std::string const& tag ) : path( fs::temp_directory_path() / ( "polysynth_cli_" + tag ) )
  {
    fs::remove_all( path );
    fs::create_directories( path );
  }
  ~temp_dir() { fs::remove_all( path ); }
};

} // namespace

TEST_CASE( "cli: synth then verify" )
{
  temp_dir dir( "synth" );
  auto const net = ( dir.path / "pm.json" ).string();
  for ( std::string method : { "poly-bidec", "xform-bidec" } )
  {
    auto const s = run( { "synth", "--method", method, "--gen1", "parity:5", "--gen2", "majority:5", "--out", net } );
    CHECK( s.code == exit_ok );
    CHECK( s.out.find( "total=" ) != std::string::npos );
    CHECK( s.out.find( "percent=" ) != std::string::npos );
    auto const v = run( { "verify", "--netlist", net, "--gen1", "parity:5", "--gen2", "majority:5" } );
    CHECK( v.code == exit_ok );
    CHECK( v.out.rfind( "PASS", 0 ) == 0u );
  }

  /* verifying against the wrong spec reports a counterexample */
  auto const v = run( { "verify", "--netlist", net, "--gen1", "majority:5", "--gen2", "parity:5" } );
  CHECK( v.code == exit_verify_failed );
  CHECK( v.out.find( "FAIL" ) != std::string::npos );
  CHECK( v.out.find( "assignment=" ) != std::string::npos );
}

TEST_CASE( "cli: synth to stdout keeps the JSON clean" )
{
  auto const s = run( { "synth", "--gen1", "parity:3", "--gen2", "majority:3" } );
  REQUIRE( s.code == exit_ok );
  CHECK( from_json( s.out ).inputs.size() == 3u );
  CHECK( s.err.find( "total=" ) != std::string::npos );
}

TEST_CASE( "cli: exit codes" )
{
  CHECK( run( {} ).code == exit_spec_error );
  CHECK( run( { "synth", "--bogus" } ).code == exit_spec_error );
  CHECK( run( { "synth", "--gen1", "parity:4", "--gen2", "sort:4" } ).code == exit_spec_error );
  CHECK( run( { "synth", "--gen1", "parity:4" } ).code == exit_spec_error );
  CHECK( run( { "synth", "--method", "magic", "--gen1", "parity:4", "--gen2", "majority:4" } ).code ==
         exit_spec_error );
  CHECK( run( { "synth", "--gen1", "mul:4x4", "--gen2", "sort:8", "--max-cells", "20" } ).code == exit_resource );
  CHECK( run( { "verify", "--netlist", "/nonexistent.json", "--gen1", "parity:4", "--gen2", "majority:4" } ).code ==
         exit_spec_error );
  CHECK( run( { "--help" } ).code == exit_ok );
}

TEST_CASE( "cli: bench writes a readable PLA" )
{
  temp_dir dir( "bench" );
  auto const pla = dir.path / "p7.pla";
  REQUIRE( run( { "bench", "parity:7", "--out", pla.string() } ).code == exit_ok );
  auto const s = read_pla_file( pla.string() );
  REQUIRE( s.outputs.size() == 1u );
  CHECK( s.outputs[0].on() == gen_parity( 7 ).on() );
  CHECK( s.outputs[0].off() == gen_parity( 7 ).off() );

  auto const synth = run( { "synth", "--pla1", pla.string(), "--gen2", "majority:7" } );
  CHECK( synth.code == exit_ok );
}

TEST_CASE( "cli: compare is deterministic" )
{
  temp_dir a( "cmp_a" ), b( "cmp_b" );
  std::vector<std::string> args{ "compare", "--suite", "parity:4/majority:4,mul:2x2/sort:4", "--no-timing" };
  auto args_a = args, args_b = args;
  for ( auto* x : { &args_a, &args_b } )
    x->push_back( "--netlist-dir" );
  args_a.push_back( a.path.string() );
  args_b.push_back( b.path.string() );
  auto const ra = run( args_a ), rb = run( args_b );
  REQUIRE( ra.code == exit_ok );
  CHECK( ra.out == rb.out );
  CHECK( ra.out.rfind( "benchmark,method,gates,poly_gates,poly_percent,wall_ms", 0 ) == 0u );
  std::size_t files = 0;
  for ( auto const& e : fs::directory_iterator( a.path ) )
  {
    ++files;
    CHECK( slurp( e.path() ) == slurp( b.path / e.path().filename() ) );
  }
  CHECK( files == 4u );
}

TEST_CASE( "cli: suites" )
{
  auto const t2 = resolve_suite( "table2", "mcnc" );
  REQUIRE( t2.size() == 6u );
  CHECK( t2[0].mode1 == "mul:2x3" );
  CHECK( t2[0].mode2 == "sort:5" );
  CHECK( t2[0].poly_ref.gates == 49u );
  CHECK( t2[0].xform_ref.gates == 65u );
  CHECK( resolve_suite( "trend", "mcnc" ).size() == 5u );
  auto const t4 = resolve_suite( "table4", "/data" );
  REQUIRE( !t4.empty() );
  CHECK( t4[0].mode2.rfind( "pla:/data/", 0 ) == 0u );
  auto const custom = resolve_suite( "parity:4/majority:4", "mcnc" );
  REQUIRE( custom.size() == 1u );
  CHECK( !custom[0].poly_ref.gates );
}
