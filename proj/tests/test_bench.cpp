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

#include "oracles.hpp"

#include <polysynth/bench.hpp>
#include <polysynth/errors.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace polysynth;

namespace
{

unsigned ones( std::uint64_t m ) { return oracle::popcount( m ); }

} // namespace

TEST_CASE( "read_pla: fd semantics and cube expansion" )
{
  auto const s = read_pla( ".i 3\n.o 2\n.ilb a b c\n.ob f g\n# comment\n1-0 10\n-11 0-\n.e\n", "t" );
  CHECK( s.name == "t" );
  CHECK( s.num_inputs() == 3u );
  REQUIRE( s.outputs.size() == 2u );
  CHECK( s.output_names == std::vector<std::string>{ "f", "g" } );
  CHECK( s.outputs[0].var_names() == std::vector<std::string>{ "a", "b", "c" } );
  /* column j is variable j: "1-0" is a = 1, c = 0 */
  auto const& f = s.outputs[0];
  CHECK( f.on().count() == 2u );
  CHECK( f.value( 0b001 ) == care_value::on );
  CHECK( f.value( 0b011 ) == care_value::on );
  CHECK( f.value( 0b110 ) == care_value::off );
  CHECK( f.dont_cares().none() );
  auto const& g = s.outputs[1];
  CHECK( g.value( 0b110 ) == care_value::dont_care );
  CHECK( g.value( 0b111 ) == care_value::dont_care );
  CHECK( g.on().none() );
}

TEST_CASE( "read_pla: fr and f types, defaults" )
{
  auto const fr = read_pla( ".i 2\n.o 1\n.type fr\n11 1\n00 0\n" );
  CHECK( fr.outputs[0].value( 3 ) == care_value::on );
  CHECK( fr.outputs[0].value( 0 ) == care_value::off );
  CHECK( fr.outputs[0].value( 1 ) == care_value::dont_care );
  CHECK( fr.outputs[0].var_names() == std::vector<std::string>{ "x1", "x2" } );
  CHECK( fr.output_names == std::vector<std::string>{ "y0" } );

  auto const f = read_pla( ".i 2\n.o 1\n.type f\n1- 1\n" );
  CHECK( f.outputs[0].on().count() == 2u );
  CHECK( f.outputs[0].off().count() == 2u );

  CHECK_THROWS_AS( read_pla( ".i 2\n.o 1\n.type fr\n11 1\n1- 0\n" ), spec_error );
}

TEST_CASE( "read_pla: errors carry positions" )
{
  auto expect = []( std::string const& text, std::size_t line ) {
    try
    {
      read_pla( text );
      FAIL( "expected a parse error" );
    }
    catch ( parse_error const& e )
    {
      CHECK( e.line() == line );
      CHECK( e.column() >= 1u );
    }
  };
  expect( ".i 2\n.o 1\n1x 1\n", 3 );
  expect( ".i 2\n.o 1\n11 1\n.i 3\n", 4 );
  expect( ".i 2\n.o 1\n111 1\n", 3 );
  expect( ".i 25\n.o 1\n", 1 );
  expect( ".o 1\n11 1\n", 2 );
  expect( ".i 2\n.o 1\n.type zz\n", 3 );
}

TEST_CASE( "write_pla / read_pla round trip" )
{
  std::mt19937_64 rng( 89 );
  for ( int trial = 0; trial < 20; ++trial )
  {
    auto const n = 1u + static_cast<unsigned>( rng() % 8u );
    std::vector<isf> outs;
    for ( unsigned o = 0; o < 3u; ++o )
      outs.push_back( oracle::random_isf( n, rng ) );
    auto const back = read_pla( write_pla( outs, { "p", "q", "r" } ) );
    REQUIRE( back.outputs.size() == 3u );
    CHECK( back.output_names == std::vector<std::string>{ "p", "q", "r" } );
    for ( unsigned o = 0; o < 3u; ++o )
    {
      CHECK( back.outputs[o].on() == outs[o].on() );
      CHECK( back.outputs[o].off() == outs[o].off() );
    }
  }
  auto const mul = gen_multiplier( 3, 3 );
  auto const back = read_pla( write_pla( mul ) );
  for ( std::size_t o = 0; o < mul.size(); ++o )
    CHECK( back.outputs[o].on() == mul[o].on() );
}

TEST_CASE( "read_pla_file uses the file stem" )
{
  auto const path = std::filesystem::temp_directory_path() / "polysynth_test_stem.pla";
  {
    std::ofstream out( path );
    out << ".i 1\n.o 1\n1 1\n";
  }
  auto const s = read_pla_file( path.string() );
  CHECK( s.name == "polysynth_test_stem" );
  std::filesystem::remove( path );
  CHECK_THROWS_AS( read_pla_file( "/nonexistent/x.pla" ), spec_error );
}

TEST_CASE( "generators against arithmetic" )
{
  for ( unsigned a = 1; a <= 6; ++a )
    for ( unsigned b = 1; a + b <= 12; ++b )
    {
      auto const mul = gen_multiplier( a, b );
      REQUIRE( mul.size() == a + b );
      for ( std::uint64_t m = 0; m < ( std::uint64_t{ 1 } << ( a + b ) ); ++m )
      {
        auto const x = m & ( ( 1u << a ) - 1u ), y = m >> a;
        auto const p = x * y;
        for ( unsigned j = 0; j < a + b; ++j )
          REQUIRE( mul[j].on().get( m ) == bool( ( p >> j ) & 1u ) );
      }
    }
  for ( unsigned k = 1; k <= 10; ++k )
  {
    auto const s = gen_sorting_net( k );
    REQUIRE( s.size() == k );
    auto const p = gen_parity( k );
    auto const maj = gen_majority( k );
    for ( std::uint64_t m = 0; m < ( std::uint64_t{ 1 } << k ); ++m )
    {
      for ( unsigned j = 0; j < k; ++j )
        CHECK( s[j].on().get( m ) == ( ones( m ) >= j + 1u ) );
      CHECK( p.on().get( m ) == bool( ones( m ) & 1u ) );
      CHECK( maj.on().get( m ) == ( 2u * ones( m ) > k ) );
    }
  }
  CHECK( gen_parity( 4 ).dont_cares().none() );
}

TEST_CASE( "make_poly_spec" )
{
  auto const a = load_spec( "mul:2x3" ), b = load_spec( "sort:5" );
  auto const specs = make_poly_spec( a, b );
  REQUIRE( specs.size() == 5u );
  CHECK( specs[2].mode1().on() == a.outputs[2].on() );
  CHECK( specs[2].mode2().on() == b.outputs[2].on() );
  CHECK( specs[0].mode2().var_names() == a.outputs[0].var_names() );
  try
  {
    make_poly_spec( load_spec( "mul:2x2" ), load_spec( "sort:5" ) );
    FAIL( "expected a spec error" );
  }
  catch ( spec_error const& e )
  {
    std::string const what = e.what();
    CHECK( what.find( "mul" ) != std::string::npos );
    CHECK( what.find( "sort" ) != std::string::npos );
  }
  CHECK_THROWS_AS( make_poly_spec( load_spec( "parity:4" ), load_spec( "sort:4" ) ), spec_error );
}

TEST_CASE( "load_spec descriptors" )
{
  CHECK( load_spec( "parity:7" ).num_inputs() == 7u );
  CHECK( load_spec( "majority:9" ).outputs.size() == 1u );
  CHECK( load_spec( "mul:4x4" ).outputs.size() == 8u );
  CHECK( load_spec( "sort:8" ).outputs.size() == 8u );
  auto const pick = load_spec( "sort:6@3" );
  REQUIRE( pick.outputs.size() == 1u );
  CHECK( pick.outputs[0].on() == gen_sorting_net( 6 )[3].on() );
  CHECK_THROWS_AS( load_spec( "sort:6@6" ), spec_error );
  CHECK_THROWS_AS( load_spec( "adder:4" ), spec_error );
  CHECK_THROWS_AS( load_spec( "parity:x" ), spec_error );
  CHECK_THROWS_AS( load_spec( "parity:30" ), spec_error );
}
