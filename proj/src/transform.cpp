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

#include <polysynth/transform.hpp>

#include <polysynth/bidecomp.hpp>
#include <polysynth/errors.hpp>

#include <algorithm>
#include <bit>

namespace polysynth
{

namespace
{

enum : std::uint8_t
{
  no_literal = 0,
  positive_literal = 1,
  negative_literal = 2
};

/* copies the single-output netlist `part` into `builder`; input i of part is driven by `inputs[i]` */
cell_id embed( netlist_builder& builder, netlist const& part, std::span<cell_id const> inputs )
{
  std::vector<cell_id> map( part.cells.size() );
  for ( std::size_t i = 0; i < part.cells.size(); ++i )
  {
    auto const& c = part.cells[i];
    if ( c.kind.op == cell_op::input )
    {
      map[i] = inputs[c.kind.input_index];
      continue;
    }
    auto const arity = c.kind.arity();
    map[i] = builder.make( c.kind, arity > 0u ? map[c.fanin[0]] : 0u, arity > 1u ? map[c.fanin[1]] : 0u );
  }
  return map[part.outputs.at( 0 ).driver];
}

std::pair<unary_kind, unary_kind> local_rule( gate_kind g, bool negated )
{
  std::pair<unary_kind, unary_kind> r;
  switch ( g )
  {
  case gate_kind::and_:
    r = { unary_kind::zero, unary_kind::wire };
    break;
  case gate_kind::or_:
    r = { unary_kind::wire, unary_kind::one };
    break;
  case gate_kind::xor_:
    r = { unary_kind::wire, unary_kind::not_ };
    break;
  }
  if ( negated )
    std::swap( r.first, r.second );
  return r;
}

std::optional<gate_kind> plain_gate( cell_op op )
{
  switch ( op )
  {
  case cell_op::and2:
    return gate_kind::and_;
  case cell_op::or2:
    return gate_kind::or_;
  case cell_op::xor2:
    return gate_kind::xor_;
  default:
    return std::nullopt;
  }
}

class eliminator
{
public:
  eliminator( netlist const& n, std::uint32_t mode_input, rule_log* log )
      : net_( cleanup( n ) ), mode_input_( mode_input ), log_( log ), builder_( real_names( net_, mode_input ) )
  {
    builder_.set_mode_labels( net_.mode_labels );
  }

  netlist run()
  {
    analyse();
    map_.resize( net_.cells.size() );
    for ( cell_id i = 0; i < net_.cells.size(); ++i )
      map_[i] = rebuild( i );
    for ( auto const& o : net_.outputs )
      builder_.add_output( o.name, map_[o.driver] );
    return cleanup( builder_.finish() );
  }

private:
  static std::vector<std::string> real_names( netlist const& n, std::uint32_t mode_input )
  {
    auto names = n.inputs;
    names.erase( names.begin() + mode_input );
    return names;
  }

  void analyse()
  {
    auto const size = net_.cells.size();
    literal_.assign( size, no_literal );
    masks_.assign( size, 0u );
    fanouts_.assign( size, {} );
    drives_output_.assign( size, false );
    for ( cell_id i = 0; i < size; ++i )
    {
      auto const& c = net_.cells[i];
      if ( c.kind.op == cell_op::input )
      {
        masks_[i] = std::uint64_t{ 1 } << c.kind.input_index;
        if ( c.kind.input_index == mode_input_ )
          literal_[i] = positive_literal;
        continue;
      }
      for ( auto k = 0u; k < c.kind.arity(); ++k )
      {
        masks_[i] |= masks_[c.fanin[k]];
        fanouts_[c.fanin[k]].push_back( i );
      }
      if ( c.kind.op == cell_op::not_ && literal_[c.fanin[0]] == positive_literal )
        literal_[i] = negative_literal;
    }
    for ( auto const& o : net_.outputs )
      drives_output_[o.driver] = true;
  }

  cell_id rebuild( cell_id i )
  {
    auto const& c = net_.cells[i];
    if ( c.kind.op == cell_op::input )
    {
      auto const index = c.kind.input_index;
      if ( index == mode_input_ )
        return builder_.make_poly_const( false, true );
      return builder_.input( index < mode_input_ ? index : index - 1u );
    }
    if ( literal_[i] == negative_literal )
    {
      return builder_.make_poly_const( true, false );
    }
    if ( auto g = plain_gate( c.kind.op ) )
    {
      auto const l0 = literal_[c.fanin[0]], l1 = literal_[c.fanin[1]];
      if ( ( l0 != no_literal ) != ( l1 != no_literal ) )
      {
        if ( auto r = try_cone_rule( i ) )
          return *r;
        auto const lit = l0 != no_literal ? 0u : 1u;
        return local_gate_rule( i, *g, c.fanin[1u - lit], literal_[c.fanin[lit]] == negative_literal );
      }
    }
    auto const arity = c.kind.arity();
    return builder_.make( c.kind, arity > 0u ? map_[c.fanin[0]] : 0u, arity > 1u ? map_[c.fanin[1]] : 0u );
  }

  /* members of the cone below `apex`, mode literals excluded (they are leaves) */
  std::vector<cell_id> members( cell_id apex ) const
  {
    std::vector<cell_id> stack{ apex }, out;
    std::vector<bool> seen( net_.cells.size(), false );
    seen[apex] = true;
    while ( !stack.empty() )
    {
      auto const x = stack.back();
      stack.pop_back();
      out.push_back( x );
      auto const& c = net_.cells[x];
      for ( auto k = 0u; k < c.kind.arity(); ++k )
      {
        auto const f = c.fanin[k];
        if ( seen[f] || net_.cells[f].kind.op == cell_op::input || literal_[f] != no_literal )
          continue;
        seen[f] = true;
        stack.push_back( f );
      }
    }
    std::sort( out.begin(), out.end() );
    return out;
  }

  std::optional<cell_id> try_cone_rule( cell_id apex )
  {
    auto const mask = masks_[apex];
    if ( std::popcount( mask ) > 3 )
      return std::nullopt;
    auto const inside = members( apex );
    std::size_t freed = 0;
    for ( auto m : inside )
    {
      if ( m != apex )
      {
        if ( drives_output_[m] )
          return std::nullopt;
        for ( auto f : fanouts_[m] )
          if ( !std::binary_search( inside.begin(), inside.end(), f ) )
            return std::nullopt;
      }
      if ( net_.cells[m].kind.is_counted() )
        ++freed;
    }

    var_set locals;
    for ( std::uint32_t v = 0; v < net_.inputs.size(); ++v )
      if ( ( ( mask >> v ) & 1u ) && v != mode_input_ )
        locals.push_back( v );

    auto const leaf_pf = cone_function( apex, locals );
    auto replacement = poly_leaf_synth( leaf_pf );
    if ( compute_gate_stats( replacement ).total_counted > freed )
      return std::nullopt;

    std::vector<cell_id> inputs;
    for ( auto v : locals )
      inputs.push_back( builder_.input( v < mode_input_ ? v : v - 1u ) );
    auto const out = embed( builder_, replacement, inputs );
    if ( log_ )
      log_->push_back( rule_application{ rule_kind::cone, apex, cone_fragment( apex, inside, locals ),
                                         std::move( replacement ) } );
    return out;
  }

  /* two-mode function of the cone over `locals`: mode m reads x0 = m - 1 */
  poly_function cone_function( cell_id apex, var_set const& locals ) const
  {
    auto const k = static_cast<unsigned>( locals.size() );
    std::vector<std::string> names;
    for ( auto v : locals )
      names.push_back( net_.inputs[v] );
    std::array<truth_table, 2> tables{ truth_table( k ), truth_table( k ) };
    for ( unsigned mode = 1u; mode <= 2u; ++mode )
    {
      std::vector<std::uint64_t> words( net_.inputs.size(), 0u );
      for ( std::uint64_t lane = 0; lane < ( std::uint64_t{ 1 } << k ); ++lane )
      {
        for ( unsigned j = 0; j < k; ++j )
          words[locals[j]] |= ( ( lane >> j ) & 1u ) << lane;
        if ( mode == 2u )
          words[mode_input_] |= std::uint64_t{ 1 } << lane;
      }
      auto const values = simulate_words( net_, words, mode );
      for ( std::uint64_t lane = 0; lane < ( std::uint64_t{ 1 } << k ); ++lane )
        tables[mode - 1u].set( lane, ( values[apex] >> lane ) & 1u );
    }
    return poly_function( isf::from_function( tables[0], names ), isf::from_function( tables[1], names ) );
  }

  netlist cone_fragment( cell_id apex, std::vector<cell_id> const& inside, var_set const& locals ) const
  {
    std::vector<std::string> names;
    for ( auto v : locals )
      names.push_back( net_.inputs[v] );
    names.push_back( net_.inputs[mode_input_] );
    netlist_builder b( names );
    auto const x0 = b.input( static_cast<std::uint32_t>( locals.size() ) );
    std::vector<cell_id> map( net_.cells.size(), 0u );
    auto leaf = [&]( cell_id f ) -> cell_id {
      auto const& c = net_.cells[f];
      if ( literal_[f] == positive_literal )
        return x0;
      if ( literal_[f] == negative_literal )
        return b.make_not( x0 );
      if ( c.kind.op == cell_op::input )
      {
        auto const pos = std::lower_bound( locals.begin(), locals.end(), c.kind.input_index ) - locals.begin();
        return b.input( static_cast<std::uint32_t>( pos ) );
      }
      return map[f];
    };
    for ( auto m : inside )
    {
      auto const& c = net_.cells[m];
      auto const arity = c.kind.arity();
      map[m] = b.make( c.kind, arity > 0u ? leaf( c.fanin[0] ) : 0u, arity > 1u ? leaf( c.fanin[1] ) : 0u );
    }
    b.add_output( "g", map[apex] );
    return b.finish();
  }

  cell_id local_gate_rule( cell_id gate, gate_kind g, cell_id other, bool negated )
  {
    auto const [u1, u2] = local_rule( g, negated );
    auto const out = builder_.make_poly1( u1, u2, map_[other] );
    if ( log_ )
    {
      netlist_builder before( { "y", net_.inputs[mode_input_] } );
      auto const lit = negated ? before.make_not( before.input( 1 ) ) : before.input( 1 );
      before.add_output( "g", before.make_gate( g, before.input( 0 ), lit ) );
      netlist_builder after( { "y" } );
      after.add_output( "g", after.make_poly1( u1, u2, after.input( 0 ) ) );
      log_->push_back( rule_application{ rule_kind::local_gate, gate, before.finish(), after.finish() } );
    }
    return out;
  }

  netlist net_;
  std::uint32_t mode_input_;
  rule_log* log_;
  netlist_builder builder_;
  std::vector<std::uint8_t> literal_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<cell_id>> fanouts_;
  std::vector<bool> drives_output_;
  std::vector<cell_id> map_;
};

} // namespace

cone cone_of( netlist const& n, cell_id apex )
{
  if ( apex >= n.cells.size() )
  {
    throw std::out_of_range( "cone_of: unknown cell id " + std::to_string( apex ) );
  }
  cone out;
  out.apex = apex;
  std::vector<bool> seen( n.cells.size(), false );
  std::vector<cell_id> stack{ apex };
  seen[apex] = true;
  while ( !stack.empty() )
  {
    auto const x = stack.back();
    stack.pop_back();
    auto const& c = n.cells[x];
    if ( c.kind.op == cell_op::input )
    {
      out.var_g.push_back( c.kind.input_index );
      continue;
    }
    out.members.push_back( x );
    for ( auto k = 0u; k < c.kind.arity(); ++k )
    {
      if ( !seen[c.fanin[k]] )
      {
        seen[c.fanin[k]] = true;
        stack.push_back( c.fanin[k] );
      }
    }
  }
  if ( n.cells[apex].kind.op == cell_op::input )
    out.members.push_back( apex );
  std::sort( out.members.begin(), out.members.end() );
  std::sort( out.var_g.begin(), out.var_g.end() );
  return out;
}

bool check_rule_application( rule_application const& app )
{
  auto const k = app.replacement.inputs.size();
  if ( app.original.inputs.size() != k + 1u || k > 6u )
    return false;
  for ( std::uint64_t m = 0; m < ( std::uint64_t{ 1 } << k ); ++m )
  {
    std::vector<char> local( k + 1u );
    for ( std::size_t j = 0; j < k; ++j )
      local[j] = ( m >> j ) & 1u;
    for ( unsigned mode = 1u; mode <= 2u; ++mode )
    {
      local[k] = mode == 2u;
      bool before_in[7], after_in[7];
      for ( std::size_t j = 0; j <= k; ++j )
        before_in[j] = local[j];
      for ( std::size_t j = 0; j < k; ++j )
        after_in[j] = local[j];
      auto const before = simulate( app.original, std::span<bool const>( before_in, k + 1u ), mode );
      auto const after = simulate( app.replacement, std::span<bool const>( after_in, k ), mode );
      if ( before != after )
        return false;
    }
  }
  return true;
}

netlist eliminate_x0( netlist const& n, std::uint32_t mode_input, rule_log* log )
{
  n.validate();
  if ( mode_input >= n.inputs.size() )
  {
    throw spec_error( "eliminate_x0: mode input " + std::to_string( mode_input ) + " does not exist" );
  }
  if ( n.inputs.size() > 64u )
  {
    throw spec_error( "eliminate_x0: at most 64 inputs are supported" );
  }
  auto out = eliminator( n, mode_input, log ).run();
  if ( out.inputs.size() + 1u != n.inputs.size() )
  {
    throw internal_error( "eliminate_x0: mode input survived elimination" );
  }
  for ( auto const& c : out.cells )
  {
    if ( c.kind.op == cell_op::input && c.kind.input_index >= out.inputs.size() )
      throw internal_error( "eliminate_x0: dangling reference to the mode input" );
  }
  return out;
}

netlist transform_design( poly_function const& pf, poly_options const& options, rule_log* log )
{
  auto const merged = merge_modes( pf );
  design_options const single{ options.max_cells, depth_limit( merged.num_vars(), options.max_depth ) };
  auto const cir = design( merged, single );
  return eliminate_x0( cir, pf.num_vars(), log );
}

} // namespace polysynth
