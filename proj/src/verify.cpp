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

#include <polysynth/verify.hpp>

#include <polysynth/errors.hpp>

#include <array>
#include <bit>
#include <limits>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polysynth
{

namespace
{

constexpr std::array<std::uint64_t, 6> var_patterns = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };

void check_arity( netlist const& n, std::vector<poly_function> const& specs )
{
  if ( n.outputs.size() != specs.size() )
  {
    throw spec_error( "netlist has " + std::to_string( n.outputs.size() ) + " outputs but the spec has " +
                      std::to_string( specs.size() ) );
  }
  for ( auto const& s : specs )
  {
    if ( s.num_vars() != n.inputs.size() )
    {
      throw spec_error( "netlist has " + std::to_string( n.inputs.size() ) + " inputs but the spec has " +
                        std::to_string( s.num_vars() ) );
    }
  }
}

std::vector<bool> to_assignment( std::uint64_t minterm, unsigned num_vars )
{
  std::vector<bool> a( num_vars );
  for ( auto i = 0u; i < num_vars; ++i )
    a[i] = ( minterm >> i ) & 1u;
  return a;
}

/* failure candidate inside one block; lane ordering is assignment order */
struct block_failure
{
  std::uint64_t order{ std::numeric_limits<std::uint64_t>::max() };
  counterexample cex;
};

} // namespace

std::vector<std::uint64_t> sample_minterms( unsigned num_vars, std::uint64_t samples, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  auto const mask = num_vars >= 64u ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << num_vars ) - 1u );
  std::vector<std::uint64_t> out( samples );
  for ( auto& m : out )
    m = rng() & mask;
  return out;
}

void set_thread_limit( unsigned threads )
{
#ifdef _OPENMP
  if ( threads > 0u )
    omp_set_num_threads( static_cast<int>( threads ) );
#else
  (void)threads;
#endif
}

verify_report verify( netlist const& n, std::vector<poly_function> const& specs, verify_options const& options )
{
  n.validate();
  check_arity( n, specs );
  auto const num_vars = static_cast<unsigned>( n.inputs.size() );
  verify_report report;
  report.exhaustive = num_vars <= options.exhaustive_limit;

  std::vector<std::uint64_t> samples;
  std::uint64_t total = 0;
  if ( report.exhaustive )
  {
    total = std::uint64_t{ 1 } << num_vars;
  }
  else
  {
    samples = sample_minterms( num_vars, options.samples, options.seed );
    total = samples.size();
  }
  report.checks = total * 2u * specs.size();

  auto const num_blocks = static_cast<std::int64_t>( ( total + 63u ) / 64u );
  std::vector<block_failure> failures( static_cast<std::size_t>( num_blocks ) );

#pragma omp parallel for schedule( static )
  for ( std::int64_t blk = 0; blk < num_blocks; ++blk )
  {
    auto const b = static_cast<std::uint64_t>( blk );
    auto const lanes = std::min<std::uint64_t>( 64u, total - b * 64u );
    auto const lane_mask = lanes == 64u ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << lanes ) - 1u );

    std::vector<std::uint64_t> inputs( num_vars, 0u );
    std::vector<std::uint64_t> minterms;
    if ( report.exhaustive )
    {
      for ( auto i = 0u; i < num_vars; ++i )
        inputs[i] = i < 6u ? var_patterns[i] : ( ( ( b >> ( i - 6u ) ) & 1u ) ? ~std::uint64_t{ 0 } : 0u );
    }
    else
    {
      minterms.assign( samples.begin() + static_cast<std::ptrdiff_t>( b * 64u ),
                       samples.begin() + static_cast<std::ptrdiff_t>( b * 64u + lanes ) );
      for ( std::uint64_t l = 0; l < lanes; ++l )
        for ( auto i = 0u; i < num_vars; ++i )
          inputs[i] |= ( ( minterms[l] >> i ) & 1u ) << l;
    }

    auto& best = failures[static_cast<std::size_t>( blk )];
    for ( unsigned mode = 1u; mode <= 2u; ++mode )
    {
      auto const values = simulate_words( n, inputs, mode );
      for ( std::size_t o = 0; o < specs.size(); ++o )
      {
        auto const& spec = specs[o].mode( mode );
        std::uint64_t on = 0, off = 0;
        if ( report.exhaustive )
        {
          on = spec.on().words()[num_vars >= 6u ? b : 0u];
          off = spec.off().words()[num_vars >= 6u ? b : 0u];
        }
        else
        {
          for ( std::uint64_t l = 0; l < lanes; ++l )
          {
            on |= std::uint64_t{ spec.on().get( minterms[l] ) } << l;
            off |= std::uint64_t{ spec.off().get( minterms[l] ) } << l;
          }
        }
        auto const got = values[n.outputs[o].driver];
        auto const bad = ( ( on & ~got ) | ( off & got ) ) & lane_mask;
        if ( bad == 0u )
          continue;
        auto const lane = static_cast<unsigned>( std::countr_zero( bad ) );
        auto const order = ( std::uint64_t{ lane } * 2u + ( mode - 1u ) ) * specs.size() + o;
        if ( order < best.order )
        {
          auto const minterm = report.exhaustive ? b * 64u + lane : minterms[lane];
          best.order = order;
          best.cex = counterexample{ o, minterm, to_assignment( minterm, num_vars ), mode,
                                     static_cast<bool>( ( on >> lane ) & 1u ), static_cast<bool>( ( got >> lane ) & 1u ) };
        }
      }
    }
  }

  report.pass = true;
  for ( auto const& f : failures )
  {
    if ( f.order != std::numeric_limits<std::uint64_t>::max() )
    {
      report.pass = false;
      report.failure = f.cex;
      break;
    }
  }
  return report;
}

verify_report verify_serial( netlist const& n, std::vector<poly_function> const& specs, verify_options const& options )
{
  n.validate();
  check_arity( n, specs );
  auto const num_vars = static_cast<unsigned>( n.inputs.size() );
  verify_report report;
  report.exhaustive = num_vars <= options.exhaustive_limit;

  std::vector<std::uint64_t> minterms;
  if ( report.exhaustive )
  {
    minterms.resize( std::uint64_t{ 1 } << num_vars );
    for ( std::uint64_t m = 0; m < minterms.size(); ++m )
      minterms[m] = m;
  }
  else
  {
    minterms = sample_minterms( num_vars, options.samples, options.seed );
  }
  report.checks = minterms.size() * 2u * specs.size();
  report.pass = true;

  for ( auto m : minterms )
  {
    auto const assignment = to_assignment( m, num_vars );
    bool buffer[max_num_vars + 1];
    for ( auto i = 0u; i < num_vars; ++i )
      buffer[i] = assignment[i];
    for ( unsigned mode = 1u; mode <= 2u; ++mode )
    {
      auto const out = simulate( n, std::span<bool const>( buffer, num_vars ), mode );
      for ( std::size_t o = 0; o < specs.size(); ++o )
      {
        auto const v = specs[o].mode( mode ).value( m );
        if ( v == care_value::dont_care )
          continue;
        bool const expected = v == care_value::on;
        if ( out[o] != expected )
        {
          report.pass = false;
          report.failure = counterexample{ o, m, assignment, mode, expected, out[o] };
          return report;
        }
      }
    }
  }
  return report;
}

} // namespace polysynth
