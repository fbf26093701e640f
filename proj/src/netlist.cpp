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

#include <polysynth/netlist.hpp>

#include <polysynth/errors.hpp>

#include <algorithm>
#include <utility>

namespace polysynth
{

/* ----- cell kinds ----- */

cell_kind cell_kind::input( std::uint32_t index )
{
  cell_kind k;
  k.op = cell_op::input;
  k.input_index = index;
  return k;
}

cell_kind cell_kind::constant( bool value )
{
  cell_kind k;
  k.op = cell_op::constant;
  k.bits = { value, value };
  return k;
}

cell_kind cell_kind::not_gate()
{
  cell_kind k;
  k.op = cell_op::not_;
  return k;
}

cell_kind cell_kind::gate( gate_kind g )
{
  cell_kind k;
  switch ( g )
  {
  case gate_kind::and_:
    k.op = cell_op::and2;
    break;
  case gate_kind::or_:
    k.op = cell_op::or2;
    break;
  case gate_kind::xor_:
    k.op = cell_op::xor2;
    break;
  }
  return k;
}

cell_kind cell_kind::poly2( gate_kind mode1, gate_kind mode2 )
{
  cell_kind k;
  k.op = cell_op::poly2;
  k.gates = { mode1, mode2 };
  return k;
}

cell_kind cell_kind::poly1( unary_kind mode1, unary_kind mode2 )
{
  cell_kind k;
  k.op = cell_op::poly1;
  k.unary = { mode1, mode2 };
  return k;
}

cell_kind cell_kind::poly_const( bool mode1, bool mode2 )
{
  cell_kind k;
  k.op = cell_op::poly_const;
  k.bits = { mode1, mode2 };
  return k;
}

unsigned cell_kind::arity() const noexcept
{
  switch ( op )
  {
  case cell_op::input:
  case cell_op::constant:
  case cell_op::poly_const:
    return 0u;
  case cell_op::not_:
  case cell_op::poly1:
    return 1u;
  case cell_op::and2:
  case cell_op::or2:
  case cell_op::xor2:
  case cell_op::poly2:
    return 2u;
  }
  return 0u;
}

bool cell_kind::is_polymorphic() const noexcept
{
  return op == cell_op::poly2 || op == cell_op::poly1 || op == cell_op::poly_const;
}

bool cell_kind::is_counted() const noexcept
{
  return op != cell_op::input && op != cell_op::constant;
}

bool cell_kind::operator==( cell_kind const& other ) const noexcept
{
  return op == other.op && input_index == other.input_index && gates == other.gates && unary == other.unary &&
         bits == other.bits;
}

bool netlist::operator==( netlist const& other ) const
{
  if ( inputs != other.inputs || outputs != other.outputs || mode_labels != other.mode_labels ||
       cells.size() != other.cells.size() )
  {
    return false;
  }
  for ( std::size_t i = 0; i < cells.size(); ++i )
  {
    auto const& a = cells[i];
    auto const& b = other.cells[i];
    if ( !( a.kind == b.kind ) )
      return false;
    for ( auto k = 0u; k < a.kind.arity(); ++k )
    {
      if ( a.fanin[k] != b.fanin[k] )
        return false;
    }
  }
  return true;
}

void netlist::validate() const
{
  for ( std::size_t i = 0; i < cells.size(); ++i )
  {
    auto const& c = cells[i];
    if ( c.kind.op == cell_op::input && c.kind.input_index >= inputs.size() )
    {
      throw spec_error( "cell " + std::to_string( i ) + " refers to input " + std::to_string( c.kind.input_index ) +
                        " but the netlist has " + std::to_string( inputs.size() ) + " inputs" );
    }
    for ( auto k = 0u; k < c.kind.arity(); ++k )
    {
      if ( c.fanin[k] >= i )
      {
        throw spec_error( "cell " + std::to_string( i ) + " reads cell " + std::to_string( c.fanin[k] ) +
                          ", which does not precede it" );
      }
    }
  }
  for ( auto const& o : outputs )
  {
    if ( o.driver >= cells.size() )
    {
      throw spec_error( "output '" + o.name + "' is driven by missing cell " + std::to_string( o.driver ) );
    }
  }
}

gate_stats compute_gate_stats( netlist const& n )
{
  gate_stats s;
  for ( auto const& c : n.cells )
  {
    if ( c.kind.is_counted() )
      ++s.total_counted;
    if ( c.kind.is_polymorphic() )
      ++s.poly_count;
  }
  s.poly_percent = s.total_counted == 0u ? 0.0 : 100.0 * static_cast<double>( s.poly_count ) /
                                                     static_cast<double>( s.total_counted );
  return s;
}

std::string gate_name( gate_kind g )
{
  switch ( g )
  {
  case gate_kind::and_:
    return "AND";
  case gate_kind::or_:
    return "OR";
  case gate_kind::xor_:
    return "XOR";
  }
  return "?";
}

std::string unary_name( unary_kind u )
{
  switch ( u )
  {
  case unary_kind::zero:
    return "ZERO";
  case unary_kind::one:
    return "ONE";
  case unary_kind::wire:
    return "WIRE";
  case unary_kind::not_:
    return "NOT";
  }
  return "?";
}

std::string kind_tag( cell_kind const& kind )
{
  switch ( kind.op )
  {
  case cell_op::input:
    return "INPUT";
  case cell_op::constant:
    return kind.bits[0] ? "CONST1" : "CONST0";
  case cell_op::not_:
    return "NOT";
  case cell_op::and2:
    return "AND2";
  case cell_op::or2:
    return "OR2";
  case cell_op::xor2:
    return "XOR2";
  case cell_op::poly2:
    return "POLY2:" + gate_name( kind.gates[0] ) + "/" + gate_name( kind.gates[1] );
  case cell_op::poly1:
    return "POLY1:" + unary_name( kind.unary[0] ) + "/" + unary_name( kind.unary[1] );
  case cell_op::poly_const:
    return std::string( "POLYCONST:" ) + ( kind.bits[0] ? "ONE" : "ZERO" ) + "/" + ( kind.bits[1] ? "ONE" : "ZERO" );
  }
  return "?";
}

std::optional<cell_kind> kind_from_tag( std::string const& tag )
{
  if ( tag == "INPUT" )
    return cell_kind::input( 0 );
  if ( tag == "CONST0" || tag == "CONST1" )
    return cell_kind::constant( tag == "CONST1" );
  if ( tag == "NOT" )
    return cell_kind::not_gate();
  if ( tag == "AND2" )
    return cell_kind::gate( gate_kind::and_ );
  if ( tag == "OR2" )
    return cell_kind::gate( gate_kind::or_ );
  if ( tag == "XOR2" )
    return cell_kind::gate( gate_kind::xor_ );

  auto const colon = tag.find( ':' );
  auto const slash = tag.find( '/' );
  if ( colon == std::string::npos || slash == std::string::npos || slash < colon )
    return std::nullopt;
  auto const family = tag.substr( 0, colon );
  auto const first = tag.substr( colon + 1, slash - colon - 1 );
  auto const second = tag.substr( slash + 1 );

  auto parse_gate = []( std::string const& s ) -> std::optional<gate_kind> {
    for ( auto g : all_gates )
      if ( gate_name( g ) == s )
        return g;
    return std::nullopt;
  };
  auto parse_unary = []( std::string const& s ) -> std::optional<unary_kind> {
    for ( auto u : { unary_kind::zero, unary_kind::one, unary_kind::wire, unary_kind::not_ } )
      if ( unary_name( u ) == s )
        return u;
    return std::nullopt;
  };
  auto parse_bit = []( std::string const& s ) -> std::optional<bool> {
    if ( s == "ZERO" )
      return false;
    if ( s == "ONE" )
      return true;
    return std::nullopt;
  };

  if ( family == "POLY2" )
  {
    auto a = parse_gate( first );
    auto b = parse_gate( second );
    if ( a && b )
      return cell_kind::poly2( *a, *b );
  }
  else if ( family == "POLY1" )
  {
    auto a = parse_unary( first );
    auto b = parse_unary( second );
    if ( a && b )
      return cell_kind::poly1( *a, *b );
  }
  else if ( family == "POLYCONST" )
  {
    auto a = parse_bit( first );
    auto b = parse_bit( second );
    if ( a && b )
      return cell_kind::poly_const( *a, *b );
  }
  return std::nullopt;
}

/* ----- simulation ----- */

bool eval_gate( gate_kind g, bool a, bool b ) noexcept
{
  switch ( g )
  {
  case gate_kind::and_:
    return a && b;
  case gate_kind::or_:
    return a || b;
  case gate_kind::xor_:
    return a != b;
  }
  return false;
}

bool eval_unary( unary_kind u, bool a ) noexcept
{
  switch ( u )
  {
  case unary_kind::zero:
    return false;
  case unary_kind::one:
    return true;
  case unary_kind::wire:
    return a;
  case unary_kind::not_:
    return !a;
  }
  return false;
}

namespace
{

std::uint64_t eval_gate_word( gate_kind g, std::uint64_t a, std::uint64_t b ) noexcept
{
  switch ( g )
  {
  case gate_kind::and_:
    return a & b;
  case gate_kind::or_:
    return a | b;
  case gate_kind::xor_:
    return a ^ b;
  }
  return 0u;
}

std::uint64_t eval_unary_word( unary_kind u, std::uint64_t a ) noexcept
{
  switch ( u )
  {
  case unary_kind::zero:
    return 0u;
  case unary_kind::one:
    return ~std::uint64_t{ 0 };
  case unary_kind::wire:
    return a;
  case unary_kind::not_:
    return ~a;
  }
  return 0u;
}

void check_mode( unsigned mode )
{
  if ( mode != 1u && mode != 2u )
  {
    throw std::invalid_argument( "mode must be 1 or 2" );
  }
}

} // namespace

std::vector<bool> simulate( netlist const& n, std::span<bool const> assignment, unsigned mode )
{
  check_mode( mode );
  if ( assignment.size() != n.inputs.size() )
  {
    throw std::invalid_argument( "simulate: assignment has " + std::to_string( assignment.size() ) +
                                 " values but the netlist has " + std::to_string( n.inputs.size() ) + " inputs" );
  }
  auto const m = mode - 1u;
  std::vector<bool> value( n.cells.size() );
  for ( std::size_t i = 0; i < n.cells.size(); ++i )
  {
    auto const& c = n.cells[i];
    bool const a = c.kind.arity() > 0u ? value[c.fanin[0]] : false;
    bool const b = c.kind.arity() > 1u ? value[c.fanin[1]] : false;
    switch ( c.kind.op )
    {
    case cell_op::input:
      value[i] = assignment[c.kind.input_index];
      break;
    case cell_op::constant:
      value[i] = c.kind.bits[0];
      break;
    case cell_op::not_:
      value[i] = !a;
      break;
    case cell_op::and2:
      value[i] = a && b;
      break;
    case cell_op::or2:
      value[i] = a || b;
      break;
    case cell_op::xor2:
      value[i] = a != b;
      break;
    case cell_op::poly2:
      value[i] = eval_gate( c.kind.gates[m], a, b );
      break;
    case cell_op::poly1:
      value[i] = eval_unary( c.kind.unary[m], a );
      break;
    case cell_op::poly_const:
      value[i] = c.kind.bits[m];
      break;
    }
  }
  std::vector<bool> out;
  out.reserve( n.outputs.size() );
  for ( auto const& o : n.outputs )
    out.push_back( value[o.driver] );
  return out;
}

std::vector<std::uint64_t> simulate_words( netlist const& n, std::span<std::uint64_t const> input_words, unsigned mode )
{
  check_mode( mode );
  if ( input_words.size() != n.inputs.size() )
  {
    throw std::invalid_argument( "simulate_words: wrong number of input words" );
  }
  auto const m = mode - 1u;
  std::vector<std::uint64_t> value( n.cells.size() );
  for ( std::size_t i = 0; i < n.cells.size(); ++i )
  {
    auto const& c = n.cells[i];
    auto const a = c.kind.arity() > 0u ? value[c.fanin[0]] : 0u;
    auto const b = c.kind.arity() > 1u ? value[c.fanin[1]] : 0u;
    switch ( c.kind.op )
    {
    case cell_op::input:
      value[i] = input_words[c.kind.input_index];
      break;
    case cell_op::constant:
      value[i] = c.kind.bits[0] ? ~std::uint64_t{ 0 } : 0u;
      break;
    case cell_op::not_:
      value[i] = ~a;
      break;
    case cell_op::and2:
      value[i] = a & b;
      break;
    case cell_op::or2:
      value[i] = a | b;
      break;
    case cell_op::xor2:
      value[i] = a ^ b;
      break;
    case cell_op::poly2:
      value[i] = eval_gate_word( c.kind.gates[m], a, b );
      break;
    case cell_op::poly1:
      value[i] = eval_unary_word( c.kind.unary[m], a );
      break;
    case cell_op::poly_const:
      value[i] = c.kind.bits[m] ? ~std::uint64_t{ 0 } : 0u;
      break;
    }
  }
  return value;
}

/* ----- builder ----- */

namespace
{

unary_kind negate( unary_kind u )
{
  switch ( u )
  {
  case unary_kind::zero:
    return unary_kind::one;
  case unary_kind::one:
    return unary_kind::zero;
  case unary_kind::wire:
    return unary_kind::not_;
  case unary_kind::not_:
    return unary_kind::wire;
  }
  return u;
}

/* outer(inner(x)) */
unary_kind compose( unary_kind outer, unary_kind inner )
{
  switch ( outer )
  {
  case unary_kind::zero:
  case unary_kind::one:
    return outer;
  case unary_kind::wire:
    return inner;
  case unary_kind::not_:
    return negate( inner );
  }
  return outer;
}

/* g(c, x) as a function of x */
unary_kind with_constant( gate_kind g, bool c )
{
  switch ( g )
  {
  case gate_kind::and_:
    return c ? unary_kind::wire : unary_kind::zero;
  case gate_kind::or_:
    return c ? unary_kind::one : unary_kind::wire;
  case gate_kind::xor_:
    return c ? unary_kind::not_ : unary_kind::wire;
  }
  return unary_kind::wire;
}

} // namespace

std::size_t netlist_builder::key_hash::operator()( key const& k ) const noexcept
{
  std::size_t h = static_cast<std::size_t>( k.kind.op );
  auto mix = [&h]( std::size_t v ) { h ^= v + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 ); };
  mix( k.kind.input_index );
  mix( static_cast<std::size_t>( k.kind.gates[0] ) * 4u + static_cast<std::size_t>( k.kind.gates[1] ) );
  mix( static_cast<std::size_t>( k.kind.unary[0] ) * 4u + static_cast<std::size_t>( k.kind.unary[1] ) );
  mix( static_cast<std::size_t>( k.kind.bits[0] ) * 2u + static_cast<std::size_t>( k.kind.bits[1] ) );
  mix( k.fanin[0] );
  mix( k.fanin[1] );
  return h;
}

netlist_builder::netlist_builder( std::vector<std::string> input_names, std::size_t max_cells )
    : max_cells_( max_cells )
{
  net_.inputs = std::move( input_names );
  for ( std::uint32_t i = 0; i < net_.inputs.size(); ++i )
  {
    net_.cells.push_back( cell{ cell_kind::input( i ), {} } );
  }
}

cell_id netlist_builder::add( cell_kind const& kind, cell_id a, cell_id b )
{
  key k{ kind, { kind.arity() > 0u ? a : 0u, kind.arity() > 1u ? b : 0u } };
  if ( auto it = strash_.find( k ); it != strash_.end() )
  {
    return it->second;
  }
  if ( net_.cells.size() >= max_cells_ )
  {
    throw resource_error( "netlist exceeds the cell limit of " + std::to_string( max_cells_ ) );
  }
  auto const id = static_cast<cell_id>( net_.cells.size() );
  net_.cells.push_back( cell{ kind, k.fanin } );
  strash_.emplace( k, id );
  return id;
}

std::optional<bool> netlist_builder::const_value( cell_id id ) const
{
  auto const& c = net_.cells[id];
  if ( c.kind.op == cell_op::constant )
    return c.kind.bits[0];
  return std::nullopt;
}

std::optional<std::array<bool, 2>> netlist_builder::mode_constants( cell_id id ) const
{
  auto const& c = net_.cells[id];
  if ( c.kind.op == cell_op::constant || c.kind.op == cell_op::poly_const )
    return c.kind.bits;
  return std::nullopt;
}

bool netlist_builder::complementary( cell_id a, cell_id b ) const
{
  auto const& ca = net_.cells[a];
  auto const& cb = net_.cells[b];
  return ( ca.kind.op == cell_op::not_ && ca.fanin[0] == b ) || ( cb.kind.op == cell_op::not_ && cb.fanin[0] == a );
}

cell_id netlist_builder::constant( bool value )
{
  return add( cell_kind::constant( value ) );
}

cell_id netlist_builder::make_not( cell_id a )
{
  auto const& c = net_.cells[a];
  switch ( c.kind.op )
  {
  case cell_op::constant:
    return constant( !c.kind.bits[0] );
  case cell_op::poly_const:
    return make_poly_const( !c.kind.bits[0], !c.kind.bits[1] );
  case cell_op::not_:
    return c.fanin[0];
  case cell_op::poly1:
  {
    auto const k = c.kind;
    auto const x = c.fanin[0];
    return make_poly1( negate( k.unary[0] ), negate( k.unary[1] ), x );
  }
  default:
    return add( cell_kind::not_gate(), a );
  }
}

cell_id netlist_builder::make_gate( gate_kind g, cell_id a, cell_id b )
{
  if ( a > b )
    std::swap( a, b );
  for ( auto [c, other] : { std::pair{ a, b }, std::pair{ b, a } } )
  {
    if ( auto v = mode_constants( c ) )
    {
      return make_poly1( with_constant( g, ( *v )[0] ), with_constant( g, ( *v )[1] ), other );
    }
  }
  if ( a == b )
  {
    return g == gate_kind::xor_ ? constant( false ) : a;
  }
  if ( complementary( a, b ) )
  {
    return constant( g != gate_kind::and_ );
  }
  if ( g == gate_kind::xor_ )
  {
    /* pull inversions through, they may cancel further up */
    for ( auto [c, other] : { std::pair{ a, b }, std::pair{ b, a } } )
    {
      if ( net_.cells[c].kind.op == cell_op::not_ )
      {
        return make_not( make_gate( g, net_.cells[c].fanin[0], other ) );
      }
    }
  }
  return add( cell_kind::gate( g ), a, b );
}

cell_id netlist_builder::make_poly2( gate_kind mode1, gate_kind mode2, cell_id a, cell_id b )
{
  if ( mode1 == mode2 )
  {
    return make_gate( mode1, a, b );
  }
  if ( a > b )
    std::swap( a, b );
  for ( auto [c, other] : { std::pair{ a, b }, std::pair{ b, a } } )
  {
    if ( auto v = mode_constants( c ) )
    {
      return make_poly1( with_constant( mode1, ( *v )[0] ), with_constant( mode2, ( *v )[1] ), other );
    }
  }
  if ( a == b )
  {
    auto same = []( gate_kind g ) { return g == gate_kind::xor_ ? unary_kind::zero : unary_kind::wire; };
    return make_poly1( same( mode1 ), same( mode2 ), a );
  }
  if ( complementary( a, b ) )
  {
    return make_poly_const( mode1 != gate_kind::and_, mode2 != gate_kind::and_ );
  }
  return add( cell_kind::poly2( mode1, mode2 ), a, b );
}

cell_id netlist_builder::make_poly1( unary_kind mode1, unary_kind mode2, cell_id a )
{
  if ( mode1 == mode2 )
  {
    switch ( mode1 )
    {
    case unary_kind::zero:
      return constant( false );
    case unary_kind::one:
      return constant( true );
    case unary_kind::wire:
      return a;
    case unary_kind::not_:
      return make_not( a );
    }
  }
  if ( auto v = mode_constants( a ) )
  {
    return make_poly_const( eval_unary( mode1, ( *v )[0] ), eval_unary( mode2, ( *v )[1] ) );
  }
  auto const& c = net_.cells[a];
  if ( c.kind.op == cell_op::not_ )
  {
    auto const x = c.fanin[0];
    return make_poly1( compose( mode1, unary_kind::not_ ), compose( mode2, unary_kind::not_ ), x );
  }
  if ( c.kind.op == cell_op::poly1 )
  {
    auto const k = c.kind;
    auto const x = c.fanin[0];
    return make_poly1( compose( mode1, k.unary[0] ), compose( mode2, k.unary[1] ), x );
  }
  return add( cell_kind::poly1( mode1, mode2 ), a );
}

cell_id netlist_builder::make_poly_const( bool mode1, bool mode2 )
{
  if ( mode1 == mode2 )
  {
    return constant( mode1 );
  }
  return add( cell_kind::poly_const( mode1, mode2 ) );
}

cell_id netlist_builder::make( cell_kind const& kind, cell_id a, cell_id b )
{
  switch ( kind.op )
  {
  case cell_op::input:
    return input( kind.input_index );
  case cell_op::constant:
    return constant( kind.bits[0] );
  case cell_op::not_:
    return make_not( a );
  case cell_op::and2:
    return make_gate( gate_kind::and_, a, b );
  case cell_op::or2:
    return make_gate( gate_kind::or_, a, b );
  case cell_op::xor2:
    return make_gate( gate_kind::xor_, a, b );
  case cell_op::poly2:
    return make_poly2( kind.gates[0], kind.gates[1], a, b );
  case cell_op::poly1:
    return make_poly1( kind.unary[0], kind.unary[1], a );
  case cell_op::poly_const:
    return make_poly_const( kind.bits[0], kind.bits[1] );
  }
  throw internal_error( "unknown cell kind" );
}

void netlist_builder::add_output( std::string name, cell_id driver )
{
  if ( driver >= net_.cells.size() )
  {
    throw internal_error( "output driver does not exist" );
  }
  net_.outputs.push_back( netlist_output{ std::move( name ), driver } );
}

netlist netlist_builder::finish() const
{
  std::vector<bool> live( net_.cells.size(), false );
  for ( std::size_t i = 0; i < net_.inputs.size(); ++i )
    live[i] = true;
  for ( auto const& o : net_.outputs )
    live[o.driver] = true;
  for ( auto i = net_.cells.size(); i-- > 0u; )
  {
    if ( !live[i] )
      continue;
    auto const& c = net_.cells[i];
    for ( auto k = 0u; k < c.kind.arity(); ++k )
      live[c.fanin[k]] = true;
  }

  netlist out;
  out.inputs = net_.inputs;
  out.mode_labels = net_.mode_labels;
  std::vector<cell_id> remap( net_.cells.size(), 0u );
  for ( std::size_t i = 0; i < net_.cells.size(); ++i )
  {
    if ( !live[i] )
      continue;
    auto c = net_.cells[i];
    for ( auto k = 0u; k < c.kind.arity(); ++k )
      c.fanin[k] = remap[c.fanin[k]];
    remap[i] = static_cast<cell_id>( out.cells.size() );
    out.cells.push_back( c );
  }
  for ( auto const& o : net_.outputs )
    out.outputs.push_back( netlist_output{ o.name, remap[o.driver] } );
  return out;
}

netlist cleanup( netlist const& n )
{
  n.validate();
  netlist_builder b( n.inputs );
  b.set_mode_labels( n.mode_labels );
  std::vector<cell_id> map( n.cells.size() );
  for ( std::size_t i = 0; i < n.cells.size(); ++i )
  {
    auto const& c = n.cells[i];
    auto const arity = c.kind.arity();
    map[i] = b.make( c.kind, arity > 0u ? map[c.fanin[0]] : 0u, arity > 1u ? map[c.fanin[1]] : 0u );
  }
  for ( auto const& o : n.outputs )
    b.add_output( o.name, map[o.driver] );
  return b.finish();
}

netlist combine( std::vector<netlist> const& parts )
{
  if ( parts.empty() )
  {
    return netlist{};
  }
  netlist_builder b( parts.front().inputs );
  b.set_mode_labels( parts.front().mode_labels );
  for ( auto const& part : parts )
  {
    if ( part.inputs.size() != parts.front().inputs.size() )
    {
      throw internal_error( "combine: netlists over different inputs" );
    }
    std::vector<cell_id> map( part.cells.size() );
    for ( std::size_t i = 0; i < part.cells.size(); ++i )
    {
      auto const& c = part.cells[i];
      auto const arity = c.kind.arity();
      map[i] = b.make( c.kind, arity > 0u ? map[c.fanin[0]] : 0u, arity > 1u ? map[c.fanin[1]] : 0u );
    }
    for ( auto const& o : part.outputs )
      b.add_output( o.name, map[o.driver] );
  }
  return b.finish();
}

} // namespace polysynth
