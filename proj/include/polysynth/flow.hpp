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
  \file flow.hpp
  \brief Multi-output synthesis driver

  Every output column is synthesized on its own (in parallel when OpenMP
  is available) and the per-output netlists are merged with structural
  hashing.  The result does not depend on thread scheduling.
*/

#pragma once

#include <polysynth/boolfn.hpp>
#include <polysynth/netlist.hpp>
#include <polysynth/polybidecomp.hpp>
#include <polysynth/transform.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polysynth
{

enum class synthesis_method
{
  poly_bidec,  /*!< polymorphic bi-decomposition */
  xform_bidec, /*!< merge, bi-decompose, eliminate x0 */
};

std::string method_name( synthesis_method m );
std::optional<synthesis_method> parse_method( std::string const& name );

struct synthesis_result
{
  netlist net;
  rule_log log; /*!< filled for xform_bidec when requested */
};

synthesis_result synthesize( std::vector<poly_function> const& specs, std::vector<std::string> const& output_names,
                             synthesis_method method, poly_options const& options = {}, bool keep_log = false );

} // namespace polysynth
