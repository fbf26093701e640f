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
  \file bench_verify.cpp
  \brief Bit-parallel OpenMP verification against the serial reference
*/

#include <polysynth/bench.hpp>
#include <polysynth/flow.hpp>
#include <polysynth/verify.hpp>

#include <benchmark/benchmark.h>

#include <map>
#include <string>

using namespace polysynth;

namespace
{

struct fixture
{
  std::vector<poly_function> specs;
  netlist net;
};

fixture const& get( unsigned bits )
{
  static std::map<unsigned, fixture> cache;
  auto it = cache.find( bits );
  if ( it == cache.end() )
  {
    auto const x = std::to_string( bits );
    auto const s1 = load_spec( "mul:" + x + "x" + x ), s2 = load_spec( "sort:" + std::to_string( 2 * bits ) );
    fixture f;
    f.specs = make_poly_spec( s1, s2 );
    f.net = synthesize( f.specs, s1.output_names, synthesis_method::poly_bidec ).net;
    it = cache.emplace( bits, std::move( f ) ).first;
  }
  return it->second;
}

void bm_verify( benchmark::State& state )
{
  auto const& f = get( static_cast<unsigned>( state.range( 0 ) ) );
  for ( auto _ : state )
    benchmark::DoNotOptimize( verify( f.net, f.specs ).pass );
}

void bm_verify_serial( benchmark::State& state )
{
  auto const& f = get( static_cast<unsigned>( state.range( 0 ) ) );
  for ( auto _ : state )
    benchmark::DoNotOptimize( verify_serial( f.net, f.specs ).pass );
}

void bm_synthesize( benchmark::State& state )
{
  auto const x = std::to_string( state.range( 0 ) );
  auto const s1 = load_spec( "mul:" + x + "x" + x ), s2 = load_spec( "sort:" + std::to_string( 2 * state.range( 0 ) ) );
  auto const specs = make_poly_spec( s1, s2 );
  auto const method = state.range( 1 ) == 0 ? synthesis_method::poly_bidec : synthesis_method::xform_bidec;
  for ( auto _ : state )
    benchmark::DoNotOptimize( synthesize( specs, s1.output_names, method ).net.cells.size() );
}

} // namespace

BENCHMARK( bm_verify )->DenseRange( 3, 5 )->Unit( benchmark::kMillisecond );
BENCHMARK( bm_verify_serial )->DenseRange( 3, 5 )->Unit( benchmark::kMillisecond );
BENCHMARK( bm_synthesize )->ArgsProduct( { { 3, 4 }, { 0, 1 } } )->Unit( benchmark::kMillisecond );

BENCHMARK_MAIN();
