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
  \file polybidecomp.hpp
  \brief Polymorphic bi-decomposition of two-mode functions

  A two-mode function f1/f2 is split through a polymorphic gate g1/g2 when
  both modes decompose over the same partition, i.e.

      f1(A, S, B) = g1(r1(A, S), h1(B, S))
      f2(A, S, B) = g2(r2(A, S), h2(B, S))

  Otherwise the modes are merged into one function of the extra variable
  x0, decomposed with an ordinary gate, and the children are split back
  into two-mode or single-mode functions.
*/

#pragma once

#include <polysynth/bidecomp.hpp>
#include <polysynth/boolfn.hpp>
#include <polysynth/netlist.hpp>

#include <optional>
#include <span>
#include <variant>

namespace polysynth
{

/*! \brief g1 in mode 1, g2 in mode 2; g1 == g2 is an ordinary gate. */
struct poly_gate
{
  gate_kind g1{};
  gate_kind g2{};

  bool is_polymorphic() const noexcept { return g1 != g2; }
  bool operator==( poly_gate const& ) const = default;
};

struct poly_options
{
  bool g2_distinct{ false }; /*!< never pick g2 == g1 */
  std::size_t max_cells{ 5'000'000u };
  std::size_t max_depth{ 100'000u };
};

struct initial_pair
{
  gate_kind g2{};
  var_set a;
  var_set b;
};

struct poly_strong_decomposition
{
  poly_gate gate;
  partition part;
  poly_function r; /*!< independent of b */
  poly_function h; /*!< independent of a */
};

using mode_child = std::variant<isf, poly_function>;

/*!
  \brief Result of decomposing the merged function f'(x, x0)

  `gate`: left and right combined by an ordinary gate.
  `shannon`: (!x & left) | (x & right) for the real variable `var`.
  `mode_shannon`: left realizes mode 1, right mode 2 (both single-mode).
*/
struct merged_decomposition
{
  enum class shape : std::uint8_t
  {
    gate,
    shannon,
    mode_shannon
  };

  shape kind{ shape::gate };
  gate_kind gate{ gate_kind::or_ };
  unsigned var{};
  mode_child left;
  mode_child right;
};

/*! \brief Seed pair for g1; scans pairs x1 < x2 of the support and the admissible g2 for mode 2. */
std::optional<initial_pair> find_initial_variable( poly_function const& pf, gate_kind g1, bool g2_distinct = false );

/*! \brief Best-scoring strong decomposition over g1 in {AND, OR, XOR}; requires more than two support variables. */
std::optional<poly_strong_decomposition> poly_decomposition( poly_function const& pf, bool g2_distinct = false );

merged_decomposition merge_and_decompose( poly_function const& pf );

/*! \brief Two-mode netlist with one output named "f". */
netlist poly_design( poly_function const& pf, poly_options const& options = {} );

cell_id poly_design_into( netlist_builder& builder, poly_function const& pf, std::span<cell_id const> signals,
                          poly_options const& options = {}, std::size_t depth = 0u );

/*! \brief Leaves with at most two support variables. */
netlist poly_leaf_synth( poly_function const& pf, poly_options const& options = {} );
cell_id poly_leaf_synth_into( netlist_builder& builder, poly_function const& pf, std::span<cell_id const> signals,
                              poly_options const& options = {}, std::size_t depth = 0u );

/*! \brief Recursion bound used as a watchdog: 4 * n * 2^n, clipped to `max_depth`. */
std::size_t depth_limit( unsigned num_vars, std::size_t max_depth );

} // namespace polysynth
