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

#include <polysynth/bidecomp.hpp>

#include <polysynth/errors.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace polysynth
{

namespace
{

truth_table exists_all( truth_table t, var_set const& vars )
{
  for ( auto v : vars )
    t = exists_var( t, v );
  return t;
}

std::uint64_t var_mask( var_set const& vars )
{
  std::uint64_t m = 0;
  for ( auto v : vars )
    m |= std::uint64_t{ 1 } << v;
  return m;
}

/* variables of f treated as belonging to a or b; everything else is shared */
bool or_decomposable( isf const& f, var_set const& a, var_set const& b )
{
  auto const r_off = exists_all( f.off(), b );
  auto const h_off = exists_all( f.off(), a );
  return ( f.on() & r_off & h_off ).none();
}

std::optional<std::pair<isf, isf>> or_children( isf const& f, var_set const& a, var_set const& b )
{
  auto const r_off = exists_all( f.off(), b );
  auto const h_off = exists_all( f.off(), a );
  if ( ( f.on() & r_off & h_off ).any() )
  {
    return std::nullopt;
  }
  auto r_on = exists_all( f.on(), b );
  r_on.and_not( r_off );
  auto h_on = exists_all( f.on() & r_off, a );
  return std::pair{ isf( std::move( r_on ), r_off, f.var_names() ), isf( std::move( h_on ), h_off, f.var_names() ) };
}

/* union-find with parity to the parent */
class parity_union_find
{
public:
  explicit parity_union_find( std::size_t size ) : parent_( size ), parity_( size, 0u )
  {
    for ( std::size_t i = 0; i < size; ++i )
      parent_[i] = static_cast<std::uint32_t>( i );
  }

  std::pair<std::uint32_t, std::uint8_t> find( std::uint32_t x )
  {
    std::uint8_t p = 0;
    auto root = x;
    while ( parent_[root] != root )
    {
      p ^= parity_[root];
      root = parent_[root];
    }
    /* compress: every node on the path points to the root directly */
    auto acc = p;
    while ( parent_[x] != root && parent_[x] != x )
    {
      auto const next = parent_[x];
      auto const px = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= px;
      x = next;
    }
    return { root, p };
  }

  /* requires value(x) ^ value(y) == p; false on contradiction */
  bool unite( std::uint32_t x, std::uint32_t y, std::uint8_t p )
  {
    auto [rx, px] = find( x );
    auto [ry, py] = find( y );
    if ( rx == ry )
    {
      return ( px ^ py ) == p;
    }
    parent_[rx] = ry;
    parity_[rx] = static_cast<std::uint8_t>( px ^ py ^ p );
    return true;
  }

private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> parity_;
};

std::optional<std::pair<isf, isf>> xor_solve( isf const& f, var_set const& a, var_set const& b, bool derive )
{
  auto const size = f.on().num_bits();
  auto const a_mask = var_mask( a );
  auto const b_mask = var_mask( b );
  /* r-node of m: m with the B bits cleared; h-node: m with the A bits cleared, offset by size */
  parity_union_find uf( 2u * size );
  std::vector<bool> touched( derive ? 2u * size : 0u, false );
  auto const care = f.care();
  for ( std::uint64_t m = 0; m < size; ++m )
  {
    if ( !care.get( m ) )
      continue;
    auto const rn = static_cast<std::uint32_t>( m & ~b_mask );
    auto const hn = static_cast<std::uint32_t>( size + ( m & ~a_mask ) );
    if ( !uf.unite( rn, hn, f.on().get( m ) ? 1u : 0u ) )
    {
      return std::nullopt;
    }
    if ( derive )
    {
      touched[rn] = true;
      touched[hn] = true;
    }
  }
  if ( !derive )
  {
    return std::pair{ isf(), isf() };
  }

  truth_table r_on( f.num_vars() ), r_off( f.num_vars() ), h_on( f.num_vars() ), h_off( f.num_vars() );
  for ( std::uint64_t m = 0; m < size; ++m )
  {
    auto const rn = static_cast<std::uint32_t>( m & ~b_mask );
    auto const hn = static_cast<std::uint32_t>( size + ( m & ~a_mask ) );
    if ( touched[rn] )
    {
      auto const value = uf.find( rn ).second;
      ( value ? r_on : r_off ).set( m );
    }
    if ( touched[hn] )
    {
      auto const value = uf.find( hn ).second;
      ( value ? h_on : h_off ).set( m );
    }
  }
  return std::pair{ isf( std::move( r_on ), std::move( r_off ), f.var_names() ),
                    isf( std::move( h_on ), std::move( h_off ), f.var_names() ) };
}

/* ----- leaves ----- */

struct leaf_recipe
{
  enum class shape : std::uint8_t
  {
    constant,
    literal,
    gate
  } kind{ shape::constant };
  bool value{};
  unsigned var{};
  bool inv{};
  gate_kind g{};
  bool inv_a{}, inv_b{}, inv_out{};
  unsigned cost{ ~0u };
};

unsigned eval_recipe( leaf_recipe const& r )
{
  unsigned fn = 0;
  for ( unsigned m = 0; m < 4u; ++m )
  {
    bool const u = m & 1u;
    bool const v = ( m >> 1 ) & 1u;
    bool out = false;
    switch ( r.kind )
    {
    case leaf_recipe::shape::constant:
      out = r.value;
      break;
    case leaf_recipe::shape::literal:
      out = ( r.var == 0u ? u : v ) != r.inv;
      break;
    case leaf_recipe::shape::gate:
      out = eval_gate( r.g, u != r.inv_a, v != r.inv_b ) != r.inv_out;
      break;
    }
    fn |= unsigned{ out } << m;
  }
  return fn;
}

std::array<leaf_recipe, 16> const& leaf_table()
{
  static auto const table = [] {
    std::array<leaf_recipe, 16> t{};
    auto offer = [&t]( leaf_recipe r ) {
      auto const fn = eval_recipe( r );
      if ( r.cost < t[fn].cost )
        t[fn] = r;
    };
    for ( bool value : { false, true } )
      offer( leaf_recipe{ leaf_recipe::shape::constant, value, 0u, false, {}, false, false, false, 0u } );
    for ( bool inv : { false, true } )
      for ( unsigned var : { 0u, 1u } )
        offer( leaf_recipe{ leaf_recipe::shape::literal, false, var, inv, {}, false, false, false, inv ? 1u : 0u } );
    for ( auto g : all_gates )
      for ( unsigned flags = 0; flags < 8u; ++flags )
      {
        leaf_recipe r{ leaf_recipe::shape::gate, false, 0u, false, g, bool( flags & 1u ), bool( flags & 2u ),
                       bool( flags & 4u ), 0u };
        r.cost = 1u + unsigned( r.inv_a ) + unsigned( r.inv_b ) + unsigned( r.inv_out );
        offer( r );
      }
    return t;
  }();
  return table;
}

cell_id emit_recipe( netlist_builder& builder, leaf_recipe const& r, cell_id u, cell_id v )
{
  switch ( r.kind )
  {
  case leaf_recipe::shape::constant:
    return builder.constant( r.value );
  case leaf_recipe::shape::literal:
  {
    auto const x = r.var == 0u ? u : v;
    return r.inv ? builder.make_not( x ) : x;
  }
  case leaf_recipe::shape::gate:
  {
    auto const a = r.inv_a ? builder.make_not( u ) : u;
    auto const b = r.inv_b ? builder.make_not( v ) : v;
    auto const out = builder.make_gate( r.g, a, b );
    return r.inv_out ? builder.make_not( out ) : out;
  }
  }
  throw internal_error( "unknown leaf recipe" );
}

std::size_t care_balance( isf const& f, unsigned var )
{
  auto const c0 = care_count( cofactor( f, var, false ) );
  auto const c1 = care_count( cofactor( f, var, true ) );
  return c0 > c1 ? c0 - c1 : c1 - c0;
}

isf fix_var( isf const& f, unsigned var, bool value )
{
  auto const c = cofactor( f, var, value );
  return isf( insert_var( c.on(), var ), insert_var( c.off(), var ), f.var_names() );
}

/* on/off bits of f as seen through at most two variables (bit m = value at u + 2v), none on conflict */
std::optional<std::pair<unsigned, unsigned>> local_pattern( isf const& f, var_set const& vars )
{
  unsigned pat[2] = { 0u, 0u };
  truth_table const* sets[2] = { &f.on(), &f.off() };
  for ( auto k = 0u; k < 2u; ++k )
  {
    auto const words = sets[k]->words();
    for ( std::size_t w = 0; w < words.size(); ++w )
    {
      for ( auto word = words[w]; word; word &= word - 1u )
      {
        auto const m = ( std::uint64_t{ w } << 6 ) | static_cast<unsigned>( std::countr_zero( word ) );
        unsigned idx = 0;
        for ( auto i = 0u; i < vars.size(); ++i )
          idx |= unsigned( ( m >> vars[i] ) & 1u ) << i;
        pat[k] |= 1u << idx;
      }
    }
  }
  if ( pat[0] & pat[1] )
    return std::nullopt;
  return std::pair{ pat[0], pat[1] };
}

decomposition bidecompose_reduced( isf const& f, var_set const& support )
{
  std::optional<partition> best;
  gate_kind best_gate{};
  std::size_t best_score = 0;
  for ( auto gate : all_gates )
  {
    auto seed = find_initial_pair( f, gate, support );
    if ( !seed )
      continue;
    auto part = grow_partition( f, gate, seed->a, seed->b, support );
    if ( part.a.size() > part.b.size() )
      std::swap( part.a, part.b );
    auto const s = score( part, support.size() );
    if ( s > best_score )
    {
      best_score = s;
      best = part;
      best_gate = gate;
    }
  }
  if ( best )
  {
    auto children = check_strong( f, best_gate, *best );
    if ( !children )
      throw internal_error( "bidecompose: selected partition is not decomposable" );
    return strong_decomposition{ best_gate, *best, std::move( children->first ), std::move( children->second ) };
  }

  std::optional<weak_decomposition> weak;
  for ( auto gate : { gate_kind::or_, gate_kind::and_ } )
  {
    for ( auto v : support )
    {
      auto w = weak_decompose( f, gate, var_set{ v } );
      if ( w && ( !weak || w->gain > weak->gain ) )
        weak = std::move( w );
    }
  }
  if ( weak )
  {
    return std::move( *weak );
  }

  auto var = support.front();
  auto balance = care_balance( f, var );
  for ( auto v : support )
  {
    auto const b = care_balance( f, v );
    if ( b < balance )
    {
      balance = b;
      var = v;
    }
  }
  return shannon_decomposition{ var, fix_var( f, var, false ), fix_var( f, var, true ) };
}

} // namespace

std::optional<std::pair<isf, isf>> check_strong( isf const& f, gate_kind gate, partition const& part )
{
  switch ( gate )
  {
  case gate_kind::or_:
    return or_children( f, part.a, part.b );
  case gate_kind::and_:
  {
    auto c = or_children( complement( f ), part.a, part.b );
    if ( !c )
      return std::nullopt;
    return std::pair{ complement( c->first ), complement( c->second ) };
  }
  case gate_kind::xor_:
    return xor_solve( f, part.a, part.b, true );
  }
  return std::nullopt;
}

bool is_decomposable( isf const& f, gate_kind gate, partition const& part )
{
  switch ( gate )
  {
  case gate_kind::or_:
    return or_decomposable( f, part.a, part.b );
  case gate_kind::and_:
    return or_decomposable( complement( f ), part.a, part.b );
  case gate_kind::xor_:
    return xor_solve( f, part.a, part.b, false ).has_value();
  }
  return false;
}

std::optional<weak_decomposition> weak_decompose( isf const& f, gate_kind gate, var_set const& b )
{
  if ( gate == gate_kind::xor_ )
  {
    throw std::invalid_argument( "weak_decompose: gate must be OR or AND" );
  }
  auto const g = gate == gate_kind::or_ ? f : complement( f );
  auto const r_off = exists_all( g.off(), b );
  auto r_on = exists_all( g.on(), b );
  r_on.and_not( r_off );
  auto covered = g.on() & r_on;
  auto const gain = covered.count();
  if ( gain == 0u )
  {
    return std::nullopt;
  }
  auto h_on = g.on();
  h_on.and_not( covered );
  isf r( std::move( r_on ), r_off, f.var_names() );
  isf h( std::move( h_on ), g.off(), f.var_names() );
  if ( gate == gate_kind::and_ )
  {
    r = complement( r );
    h = complement( h );
  }
  return weak_decomposition{ gate, b, std::move( r ), std::move( h ), gain };
}

std::optional<partition> find_initial_pair( isf const& f, gate_kind gate, var_set const& support )
{
  for ( std::size_t i = 0; i < support.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < support.size(); ++j )
    {
      partition p{ { support[i] }, { support[j] }, set_difference( support, { support[i], support[j] } ) };
      if ( is_decomposable( f, gate, p ) )
        return p;
    }
  }
  return std::nullopt;
}

partition grow_partition( isf const& f, gate_kind gate, var_set const& seed_a, var_set const& seed_b,
                          var_set const& support )
{
  partition p{ seed_a, seed_b, {} };
  auto const pending = set_difference( support, set_union( seed_a, seed_b ) );
  for ( auto x : pending )
  {
    auto const placed = set_union( set_union( p.a, p.b ), { x } );
    auto const shared = set_difference( support, placed );
    partition try_a{ set_union( p.a, { x } ), p.b, shared };
    if ( is_decomposable( f, gate, try_a ) )
    {
      p.a = std::move( try_a.a );
      continue;
    }
    partition try_b{ p.a, set_union( p.b, { x } ), shared };
    if ( is_decomposable( f, gate, try_b ) )
    {
      p.b = std::move( try_b.b );
    }
  }
  p.s = set_difference( support, set_union( p.a, p.b ) );
  return p;
}

std::size_t score( partition const& part, std::size_t v_size )
{
  auto const lo = std::min( part.a.size(), part.b.size() );
  auto const hi = std::max( part.a.size(), part.b.size() );
  return v_size * lo + hi;
}

decomposition bidecompose( isf const& f )
{
  auto [g, support] = reduce_support( f );
  if ( support.size() <= 2u )
  {
    throw std::invalid_argument( "bidecompose: function has at most two support variables; use leaf_synth" );
  }
  return bidecompose_reduced( g, support );
}

unsigned leaf_cost( unsigned function )
{
  return leaf_table().at( function & 15u ).cost;
}

cell_id leaf_synth_into( netlist_builder& builder, isf const& f, std::span<cell_id const> signals )
{
  auto const reduced = reduce_support( f ).second;
  if ( reduced.size() > 2u )
  {
    throw std::invalid_argument( "leaf_synth: more than two support variables" );
  }

  /* greedy reduction may drop the cheaper variable, so also try the other small supports */
  var_set candidates = reduced;
  for ( auto v = 0u; v < f.num_vars(); ++v )
    if ( !contains( candidates, v ) && ( f.num_vars() <= 6u || depends_on( f, v ) ) )
      candidates.push_back( v );
  std::vector<var_set> supports{ reduced };
  if ( candidates.size() <= 6u )
  {
    supports.push_back( {} );
    for ( auto i = 0u; i < candidates.size(); ++i )
    {
      supports.push_back( { candidates[i] } );
      for ( auto j = i + 1u; j < candidates.size(); ++j )
        supports.push_back( { std::min( candidates[i], candidates[j] ), std::max( candidates[i], candidates[j] ) } );
    }
  }

  auto const& table = leaf_table();
  unsigned best = 16u;
  var_set best_support;
  for ( auto const& sup : supports )
  {
    auto const pat = local_pattern( f, sup );
    if ( !pat )
      continue;
    auto const [on, off] = *pat;
    for ( unsigned fn = 0; fn < 16u; ++fn )
    {
      if ( ( fn & off ) != 0u || ( on & ~fn ) != 0u )
        continue;
      if ( best == 16u || table[fn].cost < table[best].cost )
      {
        best = fn;
        best_support = sup;
      }
    }
  }
  auto const zero = builder.constant( false );
  auto const u = best_support.size() > 0u ? signals[best_support[0]] : zero;
  auto const v = best_support.size() > 1u ? signals[best_support[1]] : zero;
  return emit_recipe( builder, table[best], u, v );
}

netlist leaf_synth( isf const& f )
{
  netlist_builder builder( f.var_names() );
  std::vector<cell_id> signals( f.num_vars() );
  for ( auto i = 0u; i < f.num_vars(); ++i )
    signals[i] = builder.input( i );
  builder.add_output( "f", leaf_synth_into( builder, f, signals ) );
  return builder.finish();
}

cell_id design_into( netlist_builder& builder, isf const& f, std::span<cell_id const> signals,
                     design_options const& options, std::size_t depth )
{
  if ( depth > options.max_depth )
  {
    throw resource_error( "bi-decomposition recursion exceeds depth " + std::to_string( options.max_depth ) );
  }
  auto [g, support] = reduce_support( f );
  if ( support.size() <= 2u )
  {
    return leaf_synth_into( builder, f, signals );
  }
  auto step = bidecompose_reduced( g, support );
  if ( auto* s = std::get_if<strong_decomposition>( &step ) )
  {
    auto const r = design_into( builder, s->r, signals, options, depth + 1u );
    auto const h = design_into( builder, s->h, signals, options, depth + 1u );
    return builder.make_gate( s->gate, r, h );
  }
  if ( auto* w = std::get_if<weak_decomposition>( &step ) )
  {
    auto const r = design_into( builder, w->r, signals, options, depth + 1u );
    auto const h = design_into( builder, w->h, signals, options, depth + 1u );
    return builder.make_gate( w->gate, r, h );
  }
  auto const& sh = std::get<shannon_decomposition>( step );
  auto const x = signals[sh.var];
  auto const low = design_into( builder, sh.low, signals, options, depth + 1u );
  auto const high = design_into( builder, sh.high, signals, options, depth + 1u );
  return builder.make_gate( gate_kind::or_, builder.make_gate( gate_kind::and_, builder.make_not( x ), low ),
                            builder.make_gate( gate_kind::and_, x, high ) );
}

netlist design( isf const& f, design_options const& options )
{
  netlist_builder builder( f.var_names(), options.max_cells );
  std::vector<cell_id> signals( f.num_vars() );
  for ( auto i = 0u; i < f.num_vars(); ++i )
    signals[i] = builder.input( i );
  builder.add_output( "f", design_into( builder, f, signals, options ) );
  return builder.finish();
}

} // namespace polysynth
