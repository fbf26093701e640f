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

#include <json.hpp>

#include <sstream>

namespace polysynth
{

namespace
{

using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column( std::string const& text, std::size_t byte )
{
  std::size_t line = 1, column = 1;
  for ( std::size_t i = 0; i < byte && i < text.size(); ++i )
  {
    if ( text[i] == '\n' )
    {
      ++line;
      column = 1;
    }
    else
    {
      ++column;
    }
  }
  return { line, column };
}

std::string dot_escape( std::string const& s )
{
  std::string r;
  for ( auto ch : s )
  {
    if ( ch == '"' || ch == '\\' )
      r.push_back( '\\' );
    r.push_back( ch );
  }
  return r;
}

std::string dot_label( netlist const& n, cell const& c )
{
  switch ( c.kind.op )
  {
  case cell_op::input:
    return n.inputs[c.kind.input_index];
  case cell_op::constant:
    return c.kind.bits[0] ? "1" : "0";
  case cell_op::not_:
    return "NOT";
  case cell_op::and2:
    return "AND";
  case cell_op::or2:
    return "OR";
  case cell_op::xor2:
    return "XOR";
  case cell_op::poly2:
    return gate_name( c.kind.gates[0] ) + "/" + gate_name( c.kind.gates[1] );
  case cell_op::poly1:
    return unary_name( c.kind.unary[0] ) + "/" + unary_name( c.kind.unary[1] );
  case cell_op::poly_const:
    return std::string( c.kind.bits[0] ? "ONE" : "ZERO" ) + "/" + ( c.kind.bits[1] ? "ONE" : "ZERO" );
  }
  return "?";
}

} // namespace

std::string to_dot( netlist const& n )
{
  std::ostringstream os;
  os << "digraph netlist {\n  rankdir=BT;\n";
  for ( std::size_t i = 0; i < n.cells.size(); ++i )
  {
    auto const& c = n.cells[i];
    os << "  n" << i << " [label=\"" << dot_escape( dot_label( n, c ) ) << "\"";
    if ( c.kind.op == cell_op::input )
      os << ", shape=triangle";
    else if ( c.kind.op == cell_op::constant )
      os << ", shape=plaintext";
    else if ( c.kind.is_polymorphic() )
      os << ", shape=box, style=filled, fillcolor=lightgrey";
    else
      os << ", shape=box";
    os << "];\n";
  }
  for ( std::size_t i = 0; i < n.cells.size(); ++i )
  {
    auto const& c = n.cells[i];
    for ( auto k = 0u; k < c.kind.arity(); ++k )
      os << "  n" << c.fanin[k] << " -> n" << i << ";\n";
  }
  for ( std::size_t i = 0; i < n.outputs.size(); ++i )
  {
    os << "  o" << i << " [label=\"" << dot_escape( n.outputs[i].name ) << "\", shape=invtriangle];\n";
    os << "  n" << n.outputs[i].driver << " -> o" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json( netlist const& n )
{
  ordered_json j;
  j["version"] = 1;
  j["inputs"] = n.inputs;
  j["mode_labels"] = { n.mode_labels[0], n.mode_labels[1] };
  auto cells = ordered_json::array();
  for ( std::size_t i = 0; i < n.cells.size(); ++i )
  {
    auto const& c = n.cells[i];
    ordered_json jc;
    jc["id"] = i;
    jc["kind"] = kind_tag( c.kind );
    if ( c.kind.op == cell_op::input )
    {
      jc["index"] = c.kind.input_index;
    }
    if ( c.kind.arity() > 0u )
    {
      auto fanin = ordered_json::array();
      for ( auto k = 0u; k < c.kind.arity(); ++k )
        fanin.push_back( c.fanin[k] );
      jc["fanin"] = fanin;
    }
    cells.push_back( std::move( jc ) );
  }
  j["cells"] = std::move( cells );
  auto outputs = ordered_json::array();
  for ( auto const& o : n.outputs )
  {
    ordered_json jo;
    jo["name"] = o.name;
    jo["driver"] = o.driver;
    outputs.push_back( std::move( jo ) );
  }
  j["outputs"] = std::move( outputs );
  return j.dump( 2 ) + "\n";
}

netlist from_json( std::string const& text )
{
  ordered_json j;
  try
  {
    j = ordered_json::parse( text );
  }
  catch ( nlohmann::json::parse_error const& e )
  {
    auto [line, column] = line_column( text, e.byte == 0u ? 0u : e.byte - 1u );
    throw parse_error( "invalid JSON netlist: " + std::string( e.what() ), line, column );
  }

  try
  {
    if ( !j.is_object() || j.value( "version", 0 ) != 1 )
    {
      throw spec_error( "netlist JSON must be an object with \"version\": 1" );
    }
    netlist n;
    n.inputs = j.at( "inputs" ).get<std::vector<std::string>>();
    if ( j.contains( "mode_labels" ) )
    {
      auto labels = j.at( "mode_labels" ).get<std::vector<std::string>>();
      if ( labels.size() != 2u )
        throw spec_error( "mode_labels must have two entries" );
      n.mode_labels = { labels[0], labels[1] };
    }
    for ( auto const& jc : j.at( "cells" ) )
    {
      auto const tag = jc.at( "kind" ).get<std::string>();
      auto kind = kind_from_tag( tag );
      if ( !kind )
      {
        throw spec_error( "unknown cell kind '" + tag + "'" );
      }
      if ( jc.contains( "id" ) && jc.at( "id" ).get<std::size_t>() != n.cells.size() )
      {
        throw spec_error( "cell ids must be consecutive from 0 (found " + jc.at( "id" ).dump() + ")" );
      }
      if ( kind->op == cell_op::input )
      {
        kind->input_index = jc.at( "index" ).get<std::uint32_t>();
      }
      cell c{ *kind, {} };
      if ( kind->arity() > 0u )
      {
        auto fanin = jc.at( "fanin" ).get<std::vector<cell_id>>();
        if ( fanin.size() != kind->arity() )
        {
          throw spec_error( "cell " + std::to_string( n.cells.size() ) + " (" + tag + ") has " +
                            std::to_string( fanin.size() ) + " fan-ins" );
        }
        for ( auto k = 0u; k < fanin.size(); ++k )
          c.fanin[k] = fanin[k];
      }
      n.cells.push_back( c );
    }
    for ( auto const& jo : j.at( "outputs" ) )
    {
      n.outputs.push_back( netlist_output{ jo.at( "name" ).get<std::string>(), jo.at( "driver" ).get<cell_id>() } );
    }
    n.validate();
    return n;
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw spec_error( "malformed netlist JSON: " + std::string( e.what() ) );
  }
}

} // namespace polysynth
