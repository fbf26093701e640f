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
  \file transform.hpp
  \brief Synthesis through the merged function f'(x, x0) and elimination of x0

  The two modes are merged into a single-mode function of one extra input
  x0, synthesized with ordinary bi-decomposition, and every gate reading
  x0 or !x0 is replaced by a polymorphic cell: a small cone (at most three
  influencing inputs, x0 included) collapses into one leaf of the two
  cofactors, any other gate becomes a one-input polymorphic cell on its
  remaining fan-in.
*/

#pragma once

#include <polysynth/boolfn.hpp>
#include <polysynth/netlist.hpp>
#include <polysynth/polybidecomp.hpp>

#include <cstdint>
#include <vector>

namespace polysynth
{

struct cone
{
  cell_id apex{};
  std::vector<cell_id> members; /*!< ascending; apex and every non-input cell feeding it */
  var_set var_g;                /*!< input indices reachable from the apex */
};

cone cone_of( netlist const& n, cell_id apex );

enum class rule_kind : std::uint8_t
{
  cone,       /*!< whole cone replaced by a two-mode leaf */
  local_gate, /*!< gate fed by the mode literal replaced by a one-input polymorphic cell */
};

/*!
  \brief One replacement, kept for auditing

  `original` has the fragment's local inputs followed by x0 as its last
  input; `replacement` has the same local inputs without x0.  The rewrite
  is exact iff the original with x0 = m - 1 equals the replacement in
  mode m, for both modes.
*/
struct rule_application
{
  rule_kind rule{};
  cell_id apex{};
  netlist original;
  netlist replacement;
};

using rule_log = std::vector<rule_application>;

/*! \brief Exhaustive check of one logged replacement over its local inputs. */
bool check_rule_application( rule_application const& app );

/*!
  \brief Removes input `mode_input` (x0) by polymorphic substitution

  Throws internal_error if x0 is still referenced afterwards.
*/
netlist eliminate_x0( netlist const& n, std::uint32_t mode_input, rule_log* log = nullptr );

/*! \brief Merge, single-mode synthesis and x0 elimination; one output named "f". */
netlist transform_design( poly_function const& pf, poly_options const& options = {}, rule_log* log = nullptr );

} // namespace polysynth
