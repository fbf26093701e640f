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

/*!
  \file acceptance.cpp
  \brief Acceptance checks, one PASS/FAIL line per criterion

  The MCNC files are looked up in $POLYSYNTH_MCNC_DIR, else in
  tests/data/mcnc of the source tree.
*/

#include "fixtures.hpp"
#include "oracles.hpp"

#include <polysynth/bench.hpp>
#include <polysynth/bidecomp.hpp>
#include <polysynth/cli.hpp>
#include <polysynth/flow.hpp>
#include <polysynth/verify.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace polysynth;
namespace fs = std::filesystem;

namespace
{

struct outcome
{
  bool pass;
  std::string detail;
};

double seconds_since( std::chrono::steady_clock::time_point t0 )
{
  return std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
}

std::string fmt( double x, int digits = 2 )
{
  std::ostringstream s;
  s << std::fixed << std::setprecision( digits ) << x;
  return s.str();
}

struct run_row
{
  std::string name;
  synthesis_method method;
  gate_stats stats;
  bool verified;
  double secs;
};

/* criterion 2 runs are reused by 3 and 7 */
std::vector<run_row> c2_rows;
rule_log c2_log;

std::vector<std::pair<std::string, std::string>> const c2_suite = {
    { "parity:4", "majority:4" }, { "parity:7", "majority:7" }, { "parity:9", "majority:9" },
    { "mul:2x3", "sort:5" },      { "mul:3x3", "sort:6" },      { "mul:4x4", "sort:8" } };

outcome criterion1()
{
  auto const t0 = std::chrono::steady_clock::now();
  poly_function const pf( gen_parity( 4 ), gen_majority( 4 ) );
  auto const merged = merge_modes( pf );
  auto const golden = fixtures::merged_map();
  bool const merge_ok = merged.on() == golden.on() && merged.off() == golden.off();

  auto const w = weak_decompose( merged, gate_kind::or_, { 3 } );
  bool r_ok = false, h_ok = false, split_ok = false;
  if ( w )
  {
    truth_table x( 5 );
    x = ~x;
    for ( unsigned v : { 4u, 0u, 1u, 2u } )
      x = x & truth_table::nth_var( 5, v );
    r_ok = equal_on_care( w->r, isf::from_function( x ) ) && w->r.on() == x;
    /* the starred cells: x0 x1 x2 = 111, x3 x4 = 11 and 10 */
    std::uint64_t const star1 = 0b10011u | 0b01100u, star2 = 0b10011u | 0b00100u;
    auto const dc = w->h.dont_cares();
    h_ok = dc.count() == 2u && dc.get( star1 ) && dc.get( star2 ) && w->h.on() == fixtures::merged_h_map().on() &&
           w->h.off() == fixtures::merged_h_map().off();
    auto const r_split = split_modes( w->r, 4 );
    auto const h_split = split_modes( w->h, 4 );
    split_ok = r_split.mode1().on().none() && equal_on_care( r_split.mode2(), fixtures::r2_map() ) &&
               r_split.mode2().on() == ( truth_table::nth_var( 4, 0 ) & truth_table::nth_var( 4, 1 ) &
                                         truth_table::nth_var( 4, 2 ) ) &&
               h_split.mode1().on() == gen_parity( 4 ).on() && h_split.mode1().off() == gen_parity( 4 ).off() &&
               h_split.mode2().on() == fixtures::h2_map().on() && h_split.mode2().off() == fixtures::h2_map().off();
  }
  auto const secs = seconds_since( t0 );
  bool const pass = merge_ok && r_ok && h_ok && split_ok && secs < 1.0;
  return { pass, std::string( "merge=" ) + ( merge_ok ? "exact" : "differs" ) + " r=" + ( r_ok ? "ok" : "bad" ) +
                     " h=" + ( h_ok ? "ok" : "bad" ) + " split=" + ( split_ok ? "ok" : "bad" ) +
                     " time=" + fmt( secs, 3 ) + "s (limit 1s)" };
}

outcome criterion2()
{
  bool pass = true;
  std::string worst;
  double worst_secs = 0;
  for ( auto const& [g1, g2] : c2_suite )
  {
    auto const s1 = load_spec( g1 ), s2 = load_spec( g2 );
    auto const specs = make_poly_spec( s1, s2 );
    for ( auto m : { synthesis_method::poly_bidec, synthesis_method::xform_bidec } )
    {
      auto const t0 = std::chrono::steady_clock::now();
      auto result = synthesize( specs, s1.output_names, m, {}, m == synthesis_method::xform_bidec );
      verify_options opts;
      opts.exhaustive_limit = 24;
      auto const report = verify( result.net, specs, opts );
      auto const secs = seconds_since( t0 );
      bool const ok = report.pass && report.exhaustive && secs <= 60.0;
      pass = pass && ok;
      if ( secs > worst_secs )
      {
        worst_secs = secs;
        worst = g1 + "/" + g2 + " " + method_name( m );
      }
      c2_rows.push_back( { g1 + "/" + g2, m, compute_gate_stats( result.net ), report.pass, secs } );
      for ( auto& app : result.log )
        c2_log.push_back( std::move( app ) );
    }
  }
  std::size_t verified = 0;
  for ( auto const& r : c2_rows )
    verified += r.verified;
  return { pass, std::to_string( verified ) + "/" + std::to_string( c2_rows.size() ) +
                     " netlists verified exhaustively; slowest " + worst + " " + fmt( worst_secs ) + "s (limit 60s)" };
}

outcome criterion3()
{
  struct ref
  {
    std::string name;
    unsigned poly, xform;
  };
  std::vector<ref> const refs = { { "mul:2x3/sort:5", 49, 65 }, { "mul:3x3/sort:6", 145, 170 }, { "mul:4x4/sort:8", 570, 630 } };
  bool pass = true;
  std::string detail;
  for ( auto const& r : refs )
  {
    for ( auto const& row : c2_rows )
    {
      if ( row.name != r.name )
        continue;
      auto const published = row.method == synthesis_method::poly_bidec ? r.poly : r.xform;
      auto const ratio = double( row.stats.total_counted ) / published;
      bool const ok = ratio <= 2.0 && ratio >= 0.5;
      pass = pass && ok;
      detail += ( detail.empty() ? "" : "; " ) + r.name + " " + method_name( row.method ) + " " +
                std::to_string( row.stats.total_counted ) + " vs " + std::to_string( published ) + " (x" + fmt( ratio ) + ")";
    }
  }
  return { pass && !detail.empty(), detail + "; tolerance factor 2.0" };
}

outcome criterion4()
{
  auto const entries = resolve_suite( "trend", "" );
  unsigned wins = 0;
  std::string detail;
  for ( auto const& e : entries )
  {
    auto const s1 = load_spec( e.mode1 ), s2 = load_spec( e.mode2 );
    auto const specs = make_poly_spec( s1, s2 );
    auto const p = compute_gate_stats( synthesize( specs, s1.output_names, synthesis_method::poly_bidec ).net );
    auto const x = compute_gate_stats( synthesize( specs, s1.output_names, synthesis_method::xform_bidec ).net );
    bool const win = p.poly_percent > x.poly_percent;
    wins += win;
    detail += ( detail.empty() ? "" : "; " ) + e.benchmark + " " + fmt( p.poly_percent, 1 ) + "% vs " +
              fmt( x.poly_percent, 1 ) + "%";
  }
  return { entries.size() == 5u && wins >= 4u,
           std::to_string( wins ) + "/" + std::to_string( entries.size() ) + " entries favor poly-bidec (need 4): " +
               detail };
}

outcome criterion5()
{
  auto const t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng( 2024 );
  std::size_t checks = 0, mismatches = 0;
  for ( int trial = 0; trial < 500; ++trial )
  {
    auto const f = oracle::random_isf( 4, rng, 20u + trial % 5u * 10u, 30u );
    for ( unsigned code = 0; code < 81u; ++code )
    {
      /* each variable in a, b or s */
      var_set a, b, s;
      unsigned c = code;
      for ( unsigned v = 0; v < 4u; ++v, c /= 3u )
        ( c % 3u == 0u ? a : c % 3u == 1u ? b : s ).push_back( v );
      if ( a.empty() || b.empty() )
        continue;
      for ( auto g : all_gates )
      {
        ++checks;
        if ( check_strong( f, g, { a, b, s } ).has_value() != oracle::decomposable( f, g, a, b ) )
          ++mismatches;
      }
    }
  }
  auto const secs = seconds_since( t0 );
  return { mismatches == 0u && secs < 60.0, std::to_string( checks - mismatches ) + "/" + std::to_string( checks ) +
                                                " verdicts agree over 500 functions; time=" + fmt( secs ) + "s (limit 60s)" };
}

outcome criterion6()
{
  std::mt19937_64 rng( 77 );
  std::size_t failures = 0, runs = 0;
  for ( int trial = 0; trial < 1000; ++trial )
  {
    auto const n = 1u + static_cast<unsigned>( rng() % 6u );
    auto const on_pct = 10u + static_cast<unsigned>( rng() % 60u );
    poly_function const pf( oracle::random_isf( n, rng, on_pct, 90u - on_pct ),
                            oracle::random_isf( n, rng, 90u - on_pct, on_pct ) );
    for ( auto m : { synthesis_method::poly_bidec, synthesis_method::xform_bidec } )
    {
      ++runs;
      try
      {
        auto const net = synthesize( { pf }, { "f" }, m ).net;
        if ( !verify( net, { pf } ).pass )
          ++failures;
      }
      catch ( std::exception const& )
      {
        ++failures;
      }
    }
  }
  return { failures == 0u, std::to_string( runs - failures ) + "/" + std::to_string( runs ) +
                               " random two-mode functions (n <= 6) synthesized and verified" };
}

outcome criterion7()
{
  std::size_t bad = 0;
  std::map<rule_kind, std::size_t> by_rule;
  for ( auto const& app : c2_log )
  {
    bad += !check_rule_application( app );
    ++by_rule[app.rule];
  }
  return { bad == 0u && !c2_log.empty(),
           std::to_string( c2_log.size() - bad ) + "/" + std::to_string( c2_log.size() ) +
               " logged replacements exact (cone " + std::to_string( by_rule[rule_kind::cone] ) + ", local gate " +
               std::to_string( by_rule[rule_kind::local_gate] ) + ")" };
}

outcome criterion8()
{
  fs::path dir = POLYSYNTH_SOURCE_DIR "/tests/data/mcnc";
  if ( auto const* env = std::getenv( "POLYSYNTH_MCNC_DIR" ) )
    dir = env;
  std::string missing, detail;
  bool pass = true;
  for ( std::string name : { "5xp1", "z5xp1", "sao2", "f51m" } )
  {
    auto const path = dir / ( name + ".pla" );
    if ( !fs::exists( path ) )
    {
      missing += ( missing.empty() ? "" : " " ) + name;
      pass = false;
      continue;
    }
    try
    {
      auto const first = read_pla_file( path.string() );
      auto const second = read_pla( write_pla( first.outputs, first.output_names ) );
      bool same = first.outputs.size() == second.outputs.size();
      for ( std::size_t o = 0; same && o < first.outputs.size(); ++o )
        same = first.outputs[o].on() == second.outputs[o].on() && first.outputs[o].off() == second.outputs[o].off();
      pass = pass && same;
      detail += " " + name + ( same ? "=ok" : "=differs" );
    }
    catch ( std::exception const& e )
    {
      pass = false;
      detail += " " + name + "=error(" + e.what() + ")";
    }
  }
  if ( !missing.empty() )
    detail += " missing in " + dir.string() + ": " + missing;
  return { pass, detail.empty() ? "" : detail.substr( 1 ) };
}

outcome criterion9()
{
  auto const base = fs::temp_directory_path() / "polysynth_acceptance";
  fs::remove_all( base );
  std::string csv[2];
  for ( int k = 0; k < 2; ++k )
  {
    auto const dir = base / ( "run" + std::to_string( k ) );
    fs::create_directories( dir );
    std::ostringstream out, err;
    run_cli( { "compare", "--suite", "table2", "--no-timing", "--seed", "7", "--netlist-dir", dir.string() }, out, err );
    csv[k] = out.str();
  }
  std::size_t files = 0, same = 0;
  for ( auto const& e : fs::directory_iterator( base / "run0" ) )
  {
    ++files;
    std::ifstream a( e.path(), std::ios::binary ), b( base / "run1" / e.path().filename(), std::ios::binary );
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    same += b && sa.str() == sb.str();
  }
  fs::remove_all( base );
  bool const pass = !csv[0].empty() && csv[0] == csv[1] && files > 0u && same == files;
  return { pass, std::string( "CSV " ) + ( csv[0] == csv[1] ? "identical" : "differs" ) + ", " + std::to_string( same ) +
                     "/" + std::to_string( files ) + " netlist files identical" };
}

} // namespace

int main()
{
  std::vector<std::function<outcome()>> const criteria = { criterion1, criterion2, criterion3, criterion4, criterion5,
                                                           criterion6, criterion7, criterion8, criterion9 };
  int failed = 0;
  for ( std::size_t i = 0; i < criteria.size(); ++i )
  {
    outcome o;
    try
    {
      o = criteria[i]();
    }
    catch ( std::exception const& e )
    {
      o = { false, std::string( "exception: " ) + e.what() };
    }
    failed += !o.pass;
    std::cout << "criterion " << ( i + 1 ) << ": " << ( o.pass ? "PASS" : "FAIL" ) << "  " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
