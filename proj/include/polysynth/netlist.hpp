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
  \file netlist.hpp
  \brief Polymorphic gate-level netlists

  A netlist is a DAG of cells stored in topological order (every fan-in id
  is smaller than the id of the cell that reads it).  Polymorphic cells
  compute one function in mode 1 and another in mode 2; the mode is a
  single global bit supplied at simulation time.

  Counting policy used by `gate_stats`: NOT, AND, OR, XOR and every
  polymorphic cell count as one gate; inputs and constants are free.
*/

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace polysynth
{

enum class gate_kind : std::uint8_t
{
  and_,
  or_,
  xor_
};

inline constexpr std::array<gate_kind, 3> all_gates = { gate_kind::and_, gate_kind::or_, gate_kind::xor_ };

/*! \brief Per-mode behavior of a one-input polymorphic cell. */
enum class unary_kind : std::uint8_t
{
  zero,
  one,
  wire,
  not_
};

enum class cell_op : std::uint8_t
{
  input,
  constant,
  not_,
  and2,
  or2,
  xor2,
  poly2,
  poly1,
  poly_const
};

struct cell_kind
{
  cell_op op{ cell_op::constant };
  std::uint32_t input_index{};
  std::array<gate_kind, 2> gates{};   /* poly2: mode 1, mode 2 */
  std::array<unary_kind, 2> unary{};  /* poly1: mode 1, mode 2 */
  std::array<bool, 2> bits{};         /* constant (bits[0]) and poly_const */

  static cell_kind input( std::uint32_t index );
  static cell_kind constant( bool value );
  static cell_kind not_gate();
  static cell_kind gate( gate_kind g );
  static cell_kind poly2( gate_kind mode1, gate_kind mode2 );
  static cell_kind poly1( unary_kind mode1, unary_kind mode2 );
  static cell_kind poly_const( bool mode1, bool mode2 );

  unsigned arity() const noexcept;
  bool is_polymorphic() const noexcept;
  bool is_counted() const noexcept;

  bool operator==( cell_kind const& other ) const noexcept;
};

using cell_id = std::uint32_t;

struct cell
{
  cell_kind kind;
  std::array<cell_id, 2> fanin{};
};

struct netlist_output
{
  std::string name;
  cell_id driver{};

  bool operator==( netlist_output const& ) const = default;
};

struct netlist
{
  std::vector<std::string> inputs;
  std::vector<cell> cells;
  std::vector<netlist_output> outputs;
  std::array<std::string, 2> mode_labels{ "mode1", "mode2" };

  /*! \brief Throws spec_error on a broken DAG, arity or output reference. */
  void validate() const;

  bool operator==( netlist const& other ) const;
};

struct gate_stats
{
  std::size_t total_counted{};
  std::size_t poly_count{};
  double poly_percent{};
};

gate_stats compute_gate_stats( netlist const& n );

/*! \brief Gate-level textual name used in JSON/DOT, e.g. "AND2", "POLY2:AND/OR", "POLY1:ZERO/WIRE". */
std::string kind_tag( cell_kind const& kind );
std::optional<cell_kind> kind_from_tag( std::string const& tag );
std::string gate_name( gate_kind g );
std::string unary_name( unary_kind u );

bool eval_gate( gate_kind g, bool a, bool b ) noexcept;
bool eval_unary( unary_kind u, bool a ) noexcept;

/*! \brief Single-assignment simulation; `mode` is 1 or 2. */
std::vector<bool> simulate( netlist const& n, std::span<bool const> assignment, unsigned mode );

/*! \brief 64 assignments at once: `input_words[i]` holds input i for each bit lane; returns one word per cell. */
std::vector<std::uint64_t> simulate_words( netlist const& n, std::span<std::uint64_t const> input_words, unsigned mode );

/*!
  \brief Structural netlist construction with local simplification

  Every `make_*` call folds constants, removes double inversion,
  simplifies gates with identical or complementary inputs, turns gates
  fed by a polymorphic constant into one-input polymorphic cells, and
  reuses structurally identical cells.
*/
class netlist_builder
{
public:
  explicit netlist_builder( std::vector<std::string> input_names, std::size_t max_cells = 50'000'000u );

  cell_id input( std::uint32_t index ) const { return index; }
  std::size_t num_inputs() const noexcept { return net_.inputs.size(); }
  std::size_t num_cells() const noexcept { return net_.cells.size(); }
  cell const& at( cell_id id ) const { return net_.cells.at( id ); }

  cell_id constant( bool value );
  cell_id make_not( cell_id a );
  cell_id make_gate( gate_kind g, cell_id a, cell_id b );
  cell_id make_poly2( gate_kind mode1, gate_kind mode2, cell_id a, cell_id b );
  cell_id make_poly1( unary_kind mode1, unary_kind mode2, cell_id a );
  cell_id make_poly_const( bool mode1, bool mode2 );

  /*! \brief Rebuilds cell `c` of another netlist with the given (already mapped) fan-ins. */
  cell_id make( cell_kind const& kind, cell_id a, cell_id b );

  void add_output( std::string name, cell_id driver );
  void set_mode_labels( std::array<std::string, 2> labels ) { net_.mode_labels = std::move( labels ); }

  /*! \brief Final netlist with cells unreachable from outputs removed. */
  netlist finish() const;

private:
  struct key
  {
    cell_kind kind;
    std::array<cell_id, 2> fanin;
    bool operator==( key const& other ) const noexcept { return kind == other.kind && fanin == other.fanin; }
  };
  struct key_hash
  {
    std::size_t operator()( key const& k ) const noexcept;
  };

  cell_id add( cell_kind const& kind, cell_id a = 0, cell_id b = 0 );
  std::optional<bool> const_value( cell_id id ) const;
  std::optional<std::array<bool, 2>> mode_constants( cell_id id ) const;
  bool complementary( cell_id a, cell_id b ) const;

  netlist net_;
  std::unordered_map<key, cell_id, key_hash> strash_;
  std::size_t max_cells_;
};

/*! \brief Constant folding, wire elision, structural dedupe and dead-cell sweep; both modes preserved. */
netlist cleanup( netlist const& n );

/*! \brief Concatenates netlists over the same inputs, keeping every output (used to merge per-output results). */
netlist combine( std::vector<netlist> const& parts );

std::string to_dot( netlist const& n );
std::string to_json( netlist const& n );
netlist from_json( std::string const& text );

} // namespace polysynth
