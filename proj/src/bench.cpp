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

#include <polysynth/bench.hpp>

#include <polysynth/errors.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace polysynth
{

namespace
{

enum class pla_type
{
  fd,
  fr,
  f
};

struct token
{
  std::string text;
  std::size_t column{};
};

std::vector<token> tokenize( std::string const& line )
{
  std::vector<token> out;
  std::size_t i = 0;
  while ( i < line.size() )
  {
    if ( std::isspace( static_cast<unsigned char>( line[i] ) ) )
    {
      ++i;
      continue;
    }
    auto const start = i;
    while ( i < line.size() && !std::isspace( static_cast<unsigned char>( line[i] ) ) )
      ++i;
    out.push_back( token{ line.substr( start, i - start ), start + 1u } );
  }
  return out;
}

unsigned parse_count( token const& t, std::size_t line, char const* what )
{
  unsigned value = 0;
  auto const* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars( t.text.data(), end, value );
  if ( ec != std::errc{} || ptr != end )
  {
    throw parse_error( std::string( "expected a number after " ) + what + ", found '" + t.text + "'", line, t.column );
  }
  return value;
}

void check_size( unsigned n, char const* what )
{
  if ( n > max_num_vars )
  {
    throw spec_error( std::string( what ) + " has " + std::to_string( n ) + " inputs; at most " +
                      std::to_string( max_num_vars ) + " are supported" );
  }
}

std::vector<std::string> numbered( std::string const& prefix, unsigned count )
{
  std::vector<std::string> out;
  for ( auto i = 0u; i < count; ++i )
    out.push_back( prefix + std::to_string( i ) );
  return out;
}

template<class Fn>
isf tabulate( unsigned n, Fn&& fn )
{
  truth_table t( n );
  for ( std::uint64_t m = 0; m < t.num_bits(); ++m )
    if ( fn( m ) )
      t.set( m );
  return isf::from_function( t );
}

unsigned parse_unsigned( std::string const& text, std::string const& descriptor )
{
  unsigned value = 0;
  auto const* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars( text.data(), end, value );
  if ( text.empty() || ec != std::errc{} || ptr != end )
  {
    throw spec_error( "malformed generator descriptor '" + descriptor + "'" );
  }
  return value;
}

} // namespace

spec_set read_pla( std::string const& text, std::string name )
{
  std::istringstream in( text );
  std::string raw;
  std::size_t line_no = 0;
  std::optional<unsigned> num_in, num_out;
  std::vector<std::string> ilb, ob;
  pla_type type = pla_type::fd;
  std::vector<truth_table> on, off, dc;
  bool seen_cube = false;

  auto ensure_tables = [&]( std::size_t line, std::size_t column ) {
    if ( !num_in || !num_out )
    {
      throw parse_error( "cube before .i and .o", line, column );
    }
    if ( on.empty() && *num_out > 0u )
    {
      on.assign( *num_out, truth_table( *num_in ) );
      off = on;
      dc = on;
    }
  };

  while ( std::getline( in, raw ) )
  {
    ++line_no;
    if ( auto hash = raw.find( '#' ); hash != std::string::npos )
      raw.erase( hash );
    auto const tokens = tokenize( raw );
    if ( tokens.empty() )
      continue;
    auto const& head = tokens.front();
    if ( head.text[0] == '.' )
    {
      auto const& d = head.text;
      if ( d == ".e" || d == ".end" )
        break;
      if ( d == ".i" || d == ".o" )
      {
        if ( seen_cube )
          throw parse_error( d + " after the first cube", line_no, head.column );
        if ( tokens.size() != 2u )
          throw parse_error( d + " takes exactly one number", line_no, head.column );
        auto const value = parse_count( tokens[1], line_no, d.c_str() );
        if ( d == ".i" )
        {
          if ( value > max_num_vars )
            throw parse_error( ".i " + std::to_string( value ) + " exceeds the limit of " +
                                   std::to_string( max_num_vars ) + " inputs",
                               line_no, tokens[1].column );
          num_in = value;
        }
        else
        {
          num_out = value;
        }
      }
      else if ( d == ".p" )
      {
        if ( tokens.size() != 2u )
          throw parse_error( ".p takes exactly one number", line_no, head.column );
        parse_count( tokens[1], line_no, ".p" );
      }
      else if ( d == ".ilb" )
      {
        for ( std::size_t k = 1; k < tokens.size(); ++k )
          ilb.push_back( tokens[k].text );
      }
      else if ( d == ".ob" )
      {
        for ( std::size_t k = 1; k < tokens.size(); ++k )
          ob.push_back( tokens[k].text );
      }
      else if ( d == ".type" )
      {
        if ( tokens.size() != 2u )
          throw parse_error( ".type takes exactly one argument", line_no, head.column );
        auto const& t = tokens[1].text;
        if ( t == "fd" )
          type = pla_type::fd;
        else if ( t == "fr" )
          type = pla_type::fr;
        else if ( t == "f" )
          type = pla_type::f;
        else
          throw parse_error( "unsupported .type '" + t + "'", line_no, tokens[1].column );
      }
      /* other directives (.phase, .pair, ...) do not affect the function */
      continue;
    }

    ensure_tables( line_no, head.column );
    seen_cube = true;
    std::string cube;
    for ( auto const& t : tokens )
      cube += t.text;
    if ( cube.size() != *num_in + *num_out )
    {
      throw parse_error( "cube has " + std::to_string( cube.size() ) + " symbols, expected " +
                             std::to_string( *num_in + *num_out ),
                         line_no, head.column );
    }
    std::uint64_t base = 0, dashes = 0;
    for ( unsigned j = 0; j < *num_in; ++j )
    {
      switch ( cube[j] )
      {
      case '1':
        base |= std::uint64_t{ 1 } << j;
        break;
      case '0':
        break;
      case '-':
        dashes |= std::uint64_t{ 1 } << j;
        break;
      default:
        throw parse_error( std::string( "invalid input symbol '" ) + cube[j] + "'", line_no,
                           head.column + j );
      }
    }
    std::vector<truth_table*> targets;
    for ( unsigned o = 0; o < *num_out; ++o )
    {
      auto const ch = cube[*num_in + o];
      switch ( ch )
      {
      case '1':
        targets.push_back( &on[o] );
        break;
      case '0':
        if ( type == pla_type::fr )
          targets.push_back( &off[o] );
        break;
      case '-':
      case '~':
        if ( type == pla_type::fd )
          targets.push_back( &dc[o] );
        break;
      default:
        throw parse_error( std::string( "invalid output symbol '" ) + ch + "'", line_no,
                           head.column + *num_in + o );
      }
    }
    if ( targets.empty() )
      continue;
    auto sub = dashes;
    while ( true )
    {
      for ( auto* t : targets )
        t->set( base | sub );
      if ( sub == 0u )
        break;
      sub = ( sub - 1u ) & dashes;
    }
  }

  if ( !num_in || !num_out )
  {
    throw parse_error( "missing .i or .o directive", line_no == 0u ? 1u : line_no, 1u );
  }
  ensure_tables( line_no, 1u );
  if ( !ilb.empty() && ilb.size() != *num_in )
  {
    throw spec_error( ".ilb lists " + std::to_string( ilb.size() ) + " names for " + std::to_string( *num_in ) +
                      " inputs" );
  }
  if ( !ob.empty() && ob.size() != *num_out )
  {
    throw spec_error( ".ob lists " + std::to_string( ob.size() ) + " names for " + std::to_string( *num_out ) +
                      " outputs" );
  }

  spec_set out;
  out.name = std::move( name );
  out.output_names = ob.empty() ? numbered( "y", *num_out ) : ob;
  auto const names = ilb.empty() ? default_var_names( *num_in ) : ilb;
  for ( unsigned o = 0; o < *num_out; ++o )
  {
    switch ( type )
    {
    case pla_type::fd:
    {
      auto on_set = on[o];
      on_set.and_not( dc[o] );
      auto off_set = ~( on[o] | dc[o] );
      out.outputs.emplace_back( std::move( on_set ), std::move( off_set ), names );
      break;
    }
    case pla_type::fr:
      if ( ( on[o] & off[o] ).any() )
      {
        throw spec_error( "output '" + out.output_names[o] + "' has minterms that are both on and off" );
      }
      out.outputs.emplace_back( on[o], off[o], names );
      break;
    case pla_type::f:
      out.outputs.emplace_back( on[o], ~on[o], names );
      break;
    }
  }
  return out;
}

spec_set read_pla_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw spec_error( "cannot open PLA file '" + path + "'" );
  }
  std::ostringstream text;
  text << in.rdbuf();
  auto name = path;
  if ( auto slash = name.find_last_of( '/' ); slash != std::string::npos )
    name.erase( 0, slash + 1u );
  if ( auto dot = name.rfind( ".pla" ); dot != std::string::npos && dot + 4u == name.size() )
    name.erase( dot );
  return read_pla( text.str(), name );
}

std::string write_pla( std::vector<isf> const& outputs, std::vector<std::string> const& output_names )
{
  if ( outputs.empty() )
  {
    throw spec_error( "write_pla: no outputs" );
  }
  auto const n = outputs.front().num_vars();
  for ( auto const& f : outputs )
    if ( f.num_vars() != n )
      throw spec_error( "write_pla: outputs over different numbers of inputs" );

  truth_table any_care( n );
  for ( auto const& f : outputs )
    any_care |= f.care();

  std::ostringstream os;
  os << ".i " << n << "\n.o " << outputs.size() << "\n.ilb";
  for ( auto const& v : outputs.front().var_names() )
    os << ' ' << v;
  os << "\n.ob";
  for ( std::size_t o = 0; o < outputs.size(); ++o )
    os << ' ' << ( o < output_names.size() ? output_names[o] : "y" + std::to_string( o ) );
  os << "\n.type fr\n.p " << any_care.count() << '\n';
  std::string row( n + 1u + outputs.size(), ' ' );
  for ( std::uint64_t m = 0; m < any_care.num_bits(); ++m )
  {
    if ( !any_care.get( m ) )
      continue;
    for ( unsigned j = 0; j < n; ++j )
      row[j] = ( ( m >> j ) & 1u ) ? '1' : '0';
    for ( std::size_t o = 0; o < outputs.size(); ++o )
    {
      auto const v = outputs[o].value( m );
      row[n + 1u + o] = v == care_value::on ? '1' : ( v == care_value::off ? '0' : '-' );
    }
    os << row << '\n';
  }
  os << ".e\n";
  return os.str();
}

std::vector<isf> gen_multiplier( unsigned a_bits, unsigned b_bits )
{
  auto const n = a_bits + b_bits;
  check_size( n, "multiplier" );
  if ( a_bits == 0u || b_bits == 0u )
  {
    throw spec_error( "multiplier operands need at least one bit" );
  }
  std::vector<isf> out;
  auto const a_mask = ( std::uint64_t{ 1 } << a_bits ) - 1u;
  for ( unsigned bit = 0; bit < n; ++bit )
  {
    out.push_back( tabulate( n, [&]( std::uint64_t m ) {
      auto const product = ( m & a_mask ) * ( m >> a_bits );
      return ( ( product >> bit ) & 1u ) != 0u;
    } ) );
  }
  return out;
}

std::vector<isf> gen_sorting_net( unsigned k )
{
  check_size( k, "sorting network" );
  std::vector<isf> out;
  for ( unsigned j = 0; j < k; ++j )
    out.push_back( tabulate( k, [j]( std::uint64_t m ) { return static_cast<unsigned>( std::popcount( m ) ) >= j + 1u; } ) );
  return out;
}

isf gen_parity( unsigned n )
{
  check_size( n, "parity" );
  return tabulate( n, []( std::uint64_t m ) { return ( std::popcount( m ) & 1 ) != 0; } );
}

isf gen_majority( unsigned n )
{
  check_size( n, "majority" );
  return tabulate( n, [n]( std::uint64_t m ) { return 2u * static_cast<unsigned>( std::popcount( m ) ) > n; } );
}

std::vector<poly_function> make_poly_spec( spec_set const& mode1, spec_set const& mode2 )
{
  if ( mode1.num_inputs() != mode2.num_inputs() || mode1.outputs.size() != mode2.outputs.size() )
  {
    throw spec_error( "cannot pair '" + mode1.name + "' (" + std::to_string( mode1.num_inputs() ) + " inputs, " +
                      std::to_string( mode1.outputs.size() ) + " outputs) with '" + mode2.name + "' (" +
                      std::to_string( mode2.num_inputs() ) + " inputs, " + std::to_string( mode2.outputs.size() ) +
                      " outputs)" );
  }
  std::vector<poly_function> out;
  for ( std::size_t o = 0; o < mode1.outputs.size(); ++o )
  {
    auto second = mode2.outputs[o];
    second.set_var_names( mode1.outputs[o].var_names() );
    out.emplace_back( mode1.outputs[o], std::move( second ) );
  }
  return out;
}

spec_set load_spec( std::string const& descriptor )
{
  if ( auto at = descriptor.rfind( '@' ); at != std::string::npos && at > descriptor.find( ':' ) )
  {
    auto const index = parse_unsigned( descriptor.substr( at + 1u ), descriptor );
    auto full = load_spec( descriptor.substr( 0, at ) );
    if ( index >= full.outputs.size() )
    {
      throw spec_error( "'" + descriptor + "' selects output " + std::to_string( index ) + " of " +
                        std::to_string( full.outputs.size() ) );
    }
    spec_set one;
    one.name = full.name + "@" + std::to_string( index );
    one.outputs = { full.outputs[index] };
    one.output_names = { full.output_names[index] };
    return one;
  }
  auto const colon = descriptor.find( ':' );
  if ( colon == std::string::npos )
  {
    throw spec_error( "malformed generator descriptor '" + descriptor + "' (expected FAMILY:PARAMS)" );
  }
  auto const family = descriptor.substr( 0, colon );
  auto const params = descriptor.substr( colon + 1u );
  spec_set s;
  if ( family == "pla" )
  {
    return read_pla_file( params );
  }
  if ( family == "parity" || family == "majority" )
  {
    auto const n = parse_unsigned( params, descriptor );
    s.name = family + std::to_string( n );
    s.outputs.push_back( family == "parity" ? gen_parity( n ) : gen_majority( n ) );
    s.output_names = { family };
    return s;
  }
  if ( family == "mul" )
  {
    auto const x = params.find( 'x' );
    if ( x == std::string::npos )
      throw spec_error( "malformed generator descriptor '" + descriptor + "' (expected mul:AxB)" );
    auto const a = parse_unsigned( params.substr( 0, x ), descriptor );
    auto const b = parse_unsigned( params.substr( x + 1u ), descriptor );
    s.name = "mul" + std::to_string( a ) + "x" + std::to_string( b );
    s.outputs = gen_multiplier( a, b );
    s.output_names = numbered( "p", a + b );
    return s;
  }
  if ( family == "sort" )
  {
    auto const k = parse_unsigned( params, descriptor );
    s.name = "sort" + std::to_string( k );
    s.outputs = gen_sorting_net( k );
    s.output_names = numbered( "s", k );
    return s;
  }
  throw spec_error( "unknown generator family '" + family + "'" );
}

} // namespace polysynth
