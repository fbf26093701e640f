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
  \file bidecomp.hpp
  \brief Single-mode bi-decomposition: f(A, S, B) = g(r(A, S), h(B, S))

  Strong checks for g in {AND, OR, XOR} on incompletely specified
  functions, weak OR/AND decomposition with a single-variable B, greedy
  partition growth and recursive netlist construction down to
  two-variable leaves.

  Child functions stay in the variable space of their parent: `r` does
  not depend on B and `h` does not depend on A.
*/

#pragma once

#include <polysynth/boolfn.hpp>
#include <polysynth/netlist.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>

namespace polysynth
{

struct partition
{
  var_set a;
  var_set b;
  var_set s;

  bool operator==( partition const& ) const = default;
};

struct strong_decomposition
{
  gate_kind gate{};
  partition part;
  isf r; /*!< depends on a and s only */
  isf h; /*!< depends on b and s only */
};

struct weak_decomposition
{
  gate_kind gate{}; /*!< OR or AND */
  var_set b;
  isf r; /*!< independent of b */
  isf h; /*!< f with the points covered by r turned into don't-cares */
  std::uint64_t gain{};
};

/*! \brief f = (!x & low) | (x & high); both children independent of x. */
struct shannon_decomposition
{
  unsigned var{};
  isf low;
  isf high;
};

using decomposition = std::variant<strong_decomposition, weak_decomposition, shannon_decomposition>;

/*!
  \brief Strong decomposability test with child derivation

  Variables in neither `a` nor `b` are treated as shared.  OR: decomposable
  iff no on-point has an off-point both in its A-row and in its B-column;
  r takes every on-point whose row is free of off-points and h covers the
  remaining ones.  AND is handled on the complement.  XOR solves the
  parity constraints r ^ h = f per shared slice with a union-find; each
  free component gets the value 0 at its root.
*/
std::optional<std::pair<isf, isf>> check_strong( isf const& f, gate_kind gate, partition const& part );

/*! \brief Verdict of `check_strong` without building the children. */
bool is_decomposable( isf const& f, gate_kind gate, partition const& part );

std::optional<weak_decomposition> weak_decompose( isf const& f, gate_kind gate, var_set const& b );

/*! \brief First pair x1 < x2 of `support` (ascending) with f gate-decomposable w.r.t. ({x1}, {x2}). */
std::optional<partition> find_initial_pair( isf const& f, gate_kind gate, var_set const& support );

/*! \brief Moves each remaining support variable (ascending) into a, else into b, while decomposability holds. */
partition grow_partition( isf const& f, gate_kind gate, var_set const& seed_a, var_set const& seed_b,
                          var_set const& support );

/*! \brief |V| * min(|A|, |B|) + max(|A|, |B|). */
std::size_t score( partition const& part, std::size_t v_size );

/*!
  \brief One decomposition step for a function with more than two support variables

  Order of preference: best-scoring strong decomposition (AND, OR, XOR
  win ties in that order), then the weak decomposition of largest gain
  (OR before AND, lowest variable first), then Shannon expansion on the
  variable whose cofactors have the closest care counts.
  Throws std::invalid_argument when the support has at most two variables.
*/
decomposition bidecompose( isf const& f );

struct design_options
{
  std::size_t max_cells{ 5'000'000u };
  std::size_t max_depth{ 100'000u };
};

/*! \brief Recursive bi-decomposition into a single-output netlist named "f". */
netlist design( isf const& f, design_options const& options = {} );

/*! \brief Builds f into `builder`; `signals[i]` drives variable i. */
cell_id design_into( netlist_builder& builder, isf const& f, std::span<cell_id const> signals,
                     design_options const& options = {}, std::size_t depth = 0u );

/*! \brief Cheapest completion of a function with at most two support variables. */
netlist leaf_synth( isf const& f );
cell_id leaf_synth_into( netlist_builder& builder, isf const& f, std::span<cell_id const> signals );

/*! \brief Counted cells of the cheapest realization of a two-input function (bit m = value at u + 2v). */
unsigned leaf_cost( unsigned function );

} // namespace polysynth
