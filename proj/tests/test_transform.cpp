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

#include "fixtures.hpp"
#include "oracles.hpp"

#include <polysynth/bench.hpp>
#include <polysynth/bidecomp.hpp>
#include <polysynth/transform.hpp>

#include <random>
#include <stdexcept>

using namespace polysynth;

namespace
{

bool has_kind( netlist const& n, cell_kind const& k )
{
  for ( auto const& c : n.cells )
    if ( c.kind == k )
      return true;
  return false;
}

/* after elimination, mode m behaves like the original with x0 = m - 1 */
bool mode_equivalent( netlist const& original, netlist const& result, unsigned x0 )
{
  for ( std::uint64_t v = 0; v < ( std::uint64_t{ 1 } << x0 ); ++v )
    for ( unsigned mode = 1u; mode <= 2u; ++mode )
      if ( oracle::run( result, v, mode ) != oracle::run( original, v | ( std::uint64_t{ mode - 1u } << x0 ), 1u ) )
        return false;
  return true;
}

std::vector<std::string> names3() { return { "x1", "x2", "x0" }; }

} // namespace

TEST_CASE( "cone_of" )
{
  netlist_builder b( names3() );
  auto const g = b.make_gate( gate_kind::and_, b.input( 2 ), b.input( 0 ) );
  b.add_output( "f", g );
  auto const n = b.finish();
  auto const in = cone_of( n, 1 );
  CHECK( in.members == std::vector<cell_id>{ 1 } );
  CHECK( in.var_g == var_set{ 1 } );
  auto const c = cone_of( n, n.outputs.front().driver );
  CHECK( c.var_g == var_set{ 0, 2 } );
  CHECK( c.members.back() == c.apex );
  CHECK_THROWS_AS( cone_of( n, 99 ), std::out_of_range );

  auto const big = design( fixtures::merged_map() );
  CHECK( cone_of( big, big.outputs.front().driver ).var_g == var_set{ 0, 1, 2, 3, 4 } );
}

TEST_CASE( "eliminate_x0: XOR with x0 becomes WIRE/NOT" )
{
  netlist_builder b( names3() );
  b.add_output( "f", b.make_gate( gate_kind::xor_, b.input( 2 ), b.input( 0 ) ) );
  auto const n = b.finish();
  rule_log log;
  auto const t = eliminate_x0( n, 2, &log );
  CHECK( t.inputs == std::vector<std::string>{ "x1", "x2" } );
  CHECK( compute_gate_stats( t ).total_counted == 1u );
  CHECK( has_kind( t, cell_kind::poly1( unary_kind::wire, unary_kind::not_ ) ) );
  CHECK( mode_equivalent( n, t, 2 ) );
  REQUIRE( log.size() == 1u );
  CHECK( check_rule_application( log.front() ) );
}

TEST_CASE( "eliminate_x0: AND with x0 over an OR keeps the OR" )
{
  netlist_builder b( names3() );
  auto const o = b.make_gate( gate_kind::or_, b.input( 0 ), b.input( 1 ) );
  b.add_output( "f", b.make_gate( gate_kind::and_, b.input( 2 ), o ) );
  auto const n = b.finish();
  rule_log log;
  auto const t = eliminate_x0( n, 2, &log );
  CHECK( compute_gate_stats( t ).total_counted == 2u );
  CHECK( compute_gate_stats( t ).poly_count == 1u );
  CHECK( has_kind( t, cell_kind::poly1( unary_kind::zero, unary_kind::wire ) ) );
  CHECK( has_kind( t, cell_kind::gate( gate_kind::or_ ) ) );
  CHECK( mode_equivalent( n, t, 2 ) );
  for ( auto const& app : log )
    CHECK( check_rule_application( app ) );
}

TEST_CASE( "eliminate_x0: literal outputs become mode constants" )
{
  for ( bool negated : { false, true } )
  {
    netlist_builder b( names3() );
    auto const x0 = b.input( 2 );
    b.add_output( "f", negated ? b.make_not( x0 ) : x0 );
    auto const n = b.finish();
    auto const t = eliminate_x0( n, 2 );
    CHECK( compute_gate_stats( t ).total_counted == 1u );
    CHECK( has_kind( t, cell_kind::poly_const( negated, !negated ) ) );
    CHECK( mode_equivalent( n, t, 2 ) );
  }
}

TEST_CASE( "eliminate_x0: OR with the negated literal on a large fan-in becomes ONE/WIRE" )
{
  netlist_builder b( { "x1", "x2", "x3", "x0" } );
  auto const h = b.make_gate( gate_kind::xor_, b.input( 0 ), b.make_gate( gate_kind::and_, b.input( 1 ), b.input( 2 ) ) );
  b.add_output( "f", b.make_gate( gate_kind::or_, b.make_not( b.input( 3 ) ), h ) );
  auto const n = b.finish();
  rule_log log;
  auto const t = eliminate_x0( n, 3, &log );
  CHECK( has_kind( t, cell_kind::poly1( unary_kind::one, unary_kind::wire ) ) );
  CHECK( compute_gate_stats( t ).total_counted == 3u );
  CHECK( mode_equivalent( n, t, 3 ) );
  REQUIRE( !log.empty() );
  CHECK( log.back().rule == rule_kind::local_gate );
  for ( auto const& app : log )
    CHECK( check_rule_application( app ) );
}

TEST_CASE( "eliminate_x0: netlist without x0 is unchanged" )
{
  netlist_builder b( names3() );
  b.add_output( "f", b.make_gate( gate_kind::and_, b.input( 0 ), b.make_not( b.input( 1 ) ) ) );
  auto const n = b.finish();
  rule_log log;
  auto const t = eliminate_x0( n, 2, &log );
  CHECK( log.empty() );
  CHECK( compute_gate_stats( t ).total_counted == compute_gate_stats( n ).total_counted );
  CHECK( compute_gate_stats( t ).poly_count == 0u );
  CHECK( mode_equivalent( n, t, 2 ) );
}

TEST_CASE( "eliminate_x0: random synthesized circuits" )
{
  std::mt19937_64 rng( 61 );
  for ( int trial = 0; trial < 120; ++trial )
  {
    auto const n = 1u + static_cast<unsigned>( rng() % 6u );
    auto const f = oracle::random_isf( n + 1u, rng );
    auto const cir = design( f );
    rule_log log;
    auto const t = eliminate_x0( cir, n, &log );
    CHECK( t.inputs.size() == n );
    CHECK( mode_equivalent( cir, t, n ) );
    CHECK( compute_gate_stats( t ).total_counted <= compute_gate_stats( cir ).total_counted + cir.outputs.size() );
    for ( auto const& app : log )
      CHECK( check_rule_application( app ) );
  }
}

TEST_CASE( "check_rule_application rejects a wrong replacement" )
{
  netlist_builder b( names3() );
  b.add_output( "f", b.make_gate( gate_kind::xor_, b.input( 2 ), b.input( 0 ) ) );
  rule_log log;
  eliminate_x0( b.finish(), 2, &log );
  REQUIRE( log.size() == 1u );
  auto bad = log.front();
  for ( auto& c : bad.replacement.cells )
    if ( c.kind.op == cell_op::poly1 )
      c.kind = cell_kind::poly1( unary_kind::not_, unary_kind::wire );
  CHECK( !check_rule_application( bad ) );
}

TEST_CASE( "transform_design: goldens" )
{
  auto const zero = isf::from_function( truth_table( 3 ) );
  auto const one = isf::from_function( truth_table::ones( 3 ) );
  auto const c = transform_design( poly_function( zero, one ) );
  CHECK( compute_gate_stats( c ).total_counted == 1u );
  CHECK( has_kind( c, cell_kind::poly_const( false, true ) ) );

  auto const f = gen_majority( 5 );
  rule_log log;
  auto const same = transform_design( poly_function( f, f ), {}, &log );
  CHECK( log.empty() );
  CHECK( compute_gate_stats( same ).poly_count == 0u );
  CHECK( compute_gate_stats( same ).total_counted == compute_gate_stats( design( f ) ).total_counted );

  poly_function const pm( gen_parity( 4 ), gen_majority( 4 ) );
  rule_log pm_log;
  auto const net = transform_design( pm, {}, &pm_log );
  CHECK( net.inputs.size() == 4u );
  CHECK( net.outputs.front().name == "f" );
  CHECK( oracle::implements( net, { pm } ) );
  CHECK( !pm_log.empty() );
  for ( auto const& app : pm_log )
    CHECK( check_rule_application( app ) );
}

TEST_CASE( "transform_design: random two-mode functions" )
{
  std::mt19937_64 rng( 67 );
  for ( int trial = 0; trial < 150; ++trial )
  {
    auto const n = 1u + static_cast<unsigned>( rng() % 6u );
    poly_function const pf( oracle::random_isf( n, rng ), oracle::random_isf( n, rng ) );
    rule_log log;
    auto const net = transform_design( pf, {}, &log );
    net.validate();
    CHECK( oracle::implements( net, { pf } ) );
    for ( auto const& app : log )
      CHECK( check_rule_application( app ) );
  }
}
