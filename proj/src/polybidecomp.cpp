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

#include <polysynth/polybidecomp.hpp>

#include <polysynth/errors.hpp>

#include <array>
#include <functional>
#include <limits>

namespace polysynth
{

namespace
{

std::array<gate_kind, 3> g2_order( gate_kind g1 )
{
  std::array<gate_kind, 3> order{ g1, g1, g1 };
  auto k = 1u;
  for ( auto g : all_gates )
    if ( g != g1 )
      order[k++] = g;
  return order;
}

bool both_decomposable( poly_function const& pf, poly_gate gate, partition const& p )
{
  return is_decomposable( pf.mode1(), gate.g1, p ) && is_decomposable( pf.mode2(), gate.g2, p );
}

std::optional<initial_pair> find_initial_reduced( poly_function const& pf, gate_kind g1, var_set const& support,
                                                  bool g2_distinct )
{
  for ( std::size_t i = 0; i < support.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < support.size(); ++j )
    {
      partition p{ { support[i] }, { support[j] }, set_difference( support, { support[i], support[j] } ) };
      if ( !is_decomposable( pf.mode1(), g1, p ) )
        continue;
      for ( auto g2 : g2_order( g1 ) )
      {
        if ( g2_distinct && g2 == g1 )
          continue;
        if ( is_decomposable( pf.mode2(), g2, p ) )
          return initial_pair{ g2, p.a, p.b };
      }
    }
  }
  return std::nullopt;
}

std::optional<poly_strong_decomposition> poly_decomposition_reduced( poly_function const& pf, var_set const& support,
                                                                     bool g2_distinct )
{
  std::optional<poly_strong_decomposition> best;
  std::size_t best_score = 0;
  for ( auto g1 : all_gates )
  {
    auto seed = find_initial_reduced( pf, g1, support, g2_distinct );
    if ( !seed )
      continue;
    poly_gate const gate{ g1, seed->g2 };
    partition p{ seed->a, seed->b, {} };
    for ( auto x : set_difference( support, set_union( seed->a, seed->b ) ) )
    {
      auto const shared = set_difference( support, set_union( set_union( p.a, p.b ), { x } ) );
      partition try_a{ set_union( p.a, { x } ), p.b, shared };
      if ( both_decomposable( pf, gate, try_a ) )
      {
        p.a = std::move( try_a.a );
        continue;
      }
      partition try_b{ p.a, set_union( p.b, { x } ), shared };
      if ( both_decomposable( pf, gate, try_b ) )
        p.b = std::move( try_b.b );
    }
    p.s = set_difference( support, set_union( p.a, p.b ) );
    if ( p.a.size() > p.b.size() )
      std::swap( p.a, p.b );
    auto const s = score( p, support.size() );
    if ( s <= best_score )
      continue;
    auto c1 = check_strong( pf.mode1(), gate.g1, p );
    auto c2 = check_strong( pf.mode2(), gate.g2, p );
    if ( !c1 || !c2 )
      throw internal_error( "poly_decomposition: grown partition lost decomposability" );
    best_score = s;
    best = poly_strong_decomposition{ gate, p, poly_function( std::move( c1->first ), std::move( c2->first ) ),
                                      poly_function( std::move( c1->second ), std::move( c2->second ) ) };
  }
  return best;
}

std::uint64_t care_sum( poly_function const& pf )
{
  return care_count( pf.mode1() ) + care_count( pf.mode2() );
}

/* child of f' back in the n-variable space of pf */
mode_child classify( isf const& child, unsigned mode_var )
{
  auto [g, support] = reduce_support( child );
  if ( contains( support, mode_var ) )
  {
    return split_modes( g, mode_var );
  }
  return cofactor( g, mode_var, false );
}

merged_decomposition mode_shannon( poly_function const& pf )
{
  return merged_decomposition{ merged_decomposition::shape::mode_shannon, gate_kind::or_, pf.num_vars(), pf.mode1(),
                               pf.mode2() };
}

/* on/off masks of f restricted to two local variables (bit m = u + 2v) */
std::pair<unsigned, unsigned> local_masks( isf const& f, var_set const& support )
{
  unsigned on = 0, off = 0;
  for ( unsigned m = 0; m < 4u; ++m )
  {
    std::uint64_t global = 0;
    if ( support.size() > 0u && ( m & 1u ) )
      global |= std::uint64_t{ 1 } << support[0];
    if ( support.size() > 1u && ( m & 2u ) )
      global |= std::uint64_t{ 1 } << support[1];
    auto const v = f.value( global );
    on |= unsigned{ v == care_value::on } << m;
    off |= unsigned{ v == care_value::off } << m;
  }
  return { on, off };
}

unsigned unary_table( unary_kind u, unsigned var )
{
  unsigned const wire = var == 0u ? 0b1010u : 0b1100u;
  switch ( u )
  {
  case unary_kind::zero:
    return 0u;
  case unary_kind::one:
    return 0b1111u;
  case unary_kind::wire:
    return wire;
  case unary_kind::not_:
    return ~wire & 0b1111u;
  }
  return 0u;
}

unsigned poly2_table( gate_kind g, bool inv_a, bool inv_b, bool inv_out )
{
  unsigned fn = 0;
  for ( unsigned m = 0; m < 4u; ++m )
  {
    bool const u = ( m & 1u ) != 0u;
    bool const v = ( m & 2u ) != 0u;
    fn |= unsigned{ eval_gate( g, u != inv_a, v != inv_b ) != inv_out } << m;
  }
  return fn;
}

bool admits( std::pair<unsigned, unsigned> const& masks, unsigned fn )
{
  return ( fn & masks.second ) == 0u && ( masks.first & ~fn ) == 0u;
}

constexpr std::array<unary_kind, 4> all_unary = { unary_kind::zero, unary_kind::one, unary_kind::wire, unary_kind::not_ };

cell_id emit_child( netlist_builder& builder, mode_child const& child, std::span<cell_id const> signals,
                    poly_options const& options, std::size_t depth )
{
  if ( auto const* f = std::get_if<isf>( &child ) )
  {
    design_options const single{ options.max_cells, options.max_depth };
    return design_into( builder, *f, signals, single, depth );
  }
  return poly_design_into( builder, std::get<poly_function>( child ), signals, options, depth );
}

cell_id emit_merged( netlist_builder& builder, merged_decomposition const& m, std::span<cell_id const> signals,
                     poly_options const& options, std::size_t depth )
{
  auto const left = emit_child( builder, m.left, signals, options, depth + 1u );
  auto const right = emit_child( builder, m.right, signals, options, depth + 1u );
  switch ( m.kind )
  {
  case merged_decomposition::shape::gate:
    return builder.make_gate( m.gate, left, right );
  case merged_decomposition::shape::shannon:
  {
    auto const x = signals[m.var];
    return builder.make_gate( gate_kind::or_, builder.make_gate( gate_kind::and_, builder.make_not( x ), left ),
                              builder.make_gate( gate_kind::and_, x, right ) );
  }
  case merged_decomposition::shape::mode_shannon:
    return builder.make_gate( gate_kind::or_, builder.make_poly1( unary_kind::wire, unary_kind::zero, left ),
                              builder.make_poly1( unary_kind::zero, unary_kind::wire, right ) );
  }
  throw internal_error( "unknown merged decomposition" );
}

std::pair<netlist_builder, std::vector<cell_id>> make_builder( std::vector<std::string> const& names,
                                                               std::size_t max_cells )
{
  netlist_builder builder( names, max_cells );
  std::vector<cell_id> signals( names.size() );
  for ( std::uint32_t i = 0; i < names.size(); ++i )
    signals[i] = builder.input( i );
  return { std::move( builder ), std::move( signals ) };
}

} // namespace

std::size_t depth_limit( unsigned num_vars, std::size_t max_depth )
{
  if ( num_vars >= 40u )
    return max_depth;
  auto const bound = std::uint64_t{ 4u } * std::max( num_vars, 1u ) * ( std::uint64_t{ 1 } << num_vars );
  return static_cast<std::size_t>( std::min<std::uint64_t>( bound, max_depth ) );
}

std::optional<initial_pair> find_initial_variable( poly_function const& pf, gate_kind g1, bool g2_distinct )
{
  auto [g, support] = reduce_support( pf );
  return find_initial_reduced( g, g1, support, g2_distinct );
}

std::optional<poly_strong_decomposition> poly_decomposition( poly_function const& pf, bool g2_distinct )
{
  auto [g, support] = reduce_support( pf );
  if ( support.size() <= 2u )
  {
    throw std::invalid_argument( "poly_decomposition: at most two support variables; use poly_leaf_synth" );
  }
  return poly_decomposition_reduced( g, support, g2_distinct );
}

merged_decomposition merge_and_decompose( poly_function const& pf )
{
  auto const n = pf.num_vars();
  auto const merged = merge_modes( pf );
  auto [f, support] = reduce_support( merged );
  if ( support.size() <= 2u || !contains( support, n ) )
  {
    return mode_shannon( pf );
  }

  merged_decomposition out;
  auto step = bidecompose( f );
  if ( auto* s = std::get_if<strong_decomposition>( &step ) )
  {
    out.gate = s->gate;
    out.left = classify( s->r, n );
    out.right = classify( s->h, n );
  }
  else if ( auto* w = std::get_if<weak_decomposition>( &step ) )
  {
    out.gate = w->gate;
    out.left = classify( w->r, n );
    out.right = classify( w->h, n );
  }
  else
  {
    auto const& sh = std::get<shannon_decomposition>( step );
    if ( sh.var == n )
    {
      return mode_shannon( pf );
    }
    out.kind = merged_decomposition::shape::shannon;
    out.var = sh.var;
    out.left = classify( sh.low, n );
    out.right = classify( sh.high, n );
  }

  /* progress guard: a two-mode child must shrink in support or in care points */
  auto const [pf_reduced, pf_support] = reduce_support( pf );
  auto const pf_care = care_sum( pf_reduced );
  for ( auto const* child : { &out.left, &out.right } )
  {
    if ( auto const* p = std::get_if<poly_function>( child ) )
    {
      auto const [c, c_support] = reduce_support( *p );
      if ( c_support == pf_support && care_sum( c ) >= pf_care )
        return mode_shannon( pf );
    }
  }
  return out;
}

cell_id poly_leaf_synth_into( netlist_builder& builder, poly_function const& pf, std::span<cell_id const> signals,
                              poly_options const& options, std::size_t depth )
{
  auto [g, support] = reduce_support( pf );
  if ( support.size() > 2u )
  {
    throw std::invalid_argument( "poly_leaf_synth: more than two support variables" );
  }
  if ( equal_on_care( g.mode1(), g.mode2() ) )
  {
    return leaf_synth_into( builder, refine( g.mode1(), g.mode2() ), signals );
  }

  auto const m1 = local_masks( g.mode1(), support );
  auto const m2 = local_masks( g.mode2(), support );
  auto best_cost = std::numeric_limits<unsigned>::max();
  std::function<cell_id()> best;

  for ( bool b1 : { false, true } )
    for ( bool b2 : { false, true } )
      if ( best_cost > 1u && admits( m1, b1 ? 15u : 0u ) && admits( m2, b2 ? 15u : 0u ) )
      {
        best_cost = 1u;
        best = [&builder, b1, b2] { return builder.make_poly_const( b1, b2 ); };
      }

  for ( unsigned k = 0; k < support.size(); ++k )
    for ( auto u1 : all_unary )
      for ( auto u2 : all_unary )
        if ( best_cost > 1u && admits( m1, unary_table( u1, k ) ) && admits( m2, unary_table( u2, k ) ) )
        {
          best_cost = 1u;
          auto const x = signals[support[k]];
          best = [&builder, u1, u2, x] { return builder.make_poly1( u1, u2, x ); };
        }

  if ( support.size() == 2u )
  {
    for ( auto g1 : all_gates )
      for ( auto g2 : all_gates )
      {
        if ( g1 == g2 )
          continue;
        for ( unsigned flags = 0; flags < 8u; ++flags )
        {
          bool const ia = flags & 1u, ib = flags & 2u, io = flags & 4u;
          auto const cost = 1u + unsigned( ia ) + unsigned( ib ) + unsigned( io );
          if ( cost >= best_cost )
            continue;
          if ( !admits( m1, poly2_table( g1, ia, ib, io ) ) || !admits( m2, poly2_table( g2, ia, ib, io ) ) )
            continue;
          best_cost = cost;
          auto const u = signals[support[0]];
          auto const v = signals[support[1]];
          best = [&builder, g1, g2, ia, ib, io, u, v] {
            auto const a = ia ? builder.make_not( u ) : u;
            auto const b = ib ? builder.make_not( v ) : v;
            auto const out = builder.make_poly2( g1, g2, a, b );
            return io ? builder.make_not( out ) : out;
          };
        }
      }
  }

  if ( best )
  {
    return best();
  }
  return emit_merged( builder, merge_and_decompose( g ), signals, options, depth );
}

netlist poly_leaf_synth( poly_function const& pf, poly_options const& options )
{
  auto [builder, signals] = make_builder( pf.var_names(), options.max_cells );
  builder.add_output( "f", poly_leaf_synth_into( builder, pf, signals, options ) );
  return builder.finish();
}

cell_id poly_design_into( netlist_builder& builder, poly_function const& pf, std::span<cell_id const> signals,
                          poly_options const& options, std::size_t depth )
{
  if ( depth > options.max_depth )
  {
    throw resource_error( "polymorphic decomposition exceeds recursion depth " + std::to_string( options.max_depth ) );
  }
  auto [g, support] = reduce_support( pf );
  if ( equal_on_care( g.mode1(), g.mode2() ) )
  {
    design_options const single{ options.max_cells, options.max_depth };
    return design_into( builder, refine( g.mode1(), g.mode2() ), signals, single, depth );
  }
  if ( support.size() <= 2u )
  {
    return poly_leaf_synth_into( builder, g, signals, options, depth );
  }
  if ( auto p = poly_decomposition_reduced( g, support, options.g2_distinct ) )
  {
    auto const r = poly_design_into( builder, p->r, signals, options, depth + 1u );
    auto const h = poly_design_into( builder, p->h, signals, options, depth + 1u );
    return builder.make_poly2( p->gate.g1, p->gate.g2, r, h );
  }
  return emit_merged( builder, merge_and_decompose( g ), signals, options, depth );
}

netlist poly_design( poly_function const& pf, poly_options const& options )
{
  auto bounded = options;
  bounded.max_depth = depth_limit( pf.num_vars(), options.max_depth );
  auto [builder, signals] = make_builder( pf.var_names(), options.max_cells );
  builder.add_output( "f", poly_design_into( builder, pf, signals, bounded ) );
  return builder.finish();
}

} // namespace polysynth
