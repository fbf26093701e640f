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
  \file bench.hpp
  \brief Benchmark generators and PLA reading/writing

  PLA input column j is variable j (the leftmost column is variable 0).
  Without a `.type` directive the file is read as type fd: an output '1'
  adds the expanded cube to the on-set, '-' or '~' to the don't-care set
  (which wins over '1'), and every minterm not mentioned is off.  With
  `.type fr` a '0' marks off-points and unmentioned minterms are
  don't-cares; `.type f` lists on-points only.
*/

#pragma once

#include <polysynth/boolfn.hpp>

#include <string>
#include <vector>

namespace polysynth
{

/*! \brief A multi-output single-mode specification. */
struct spec_set
{
  std::string name;
  std::vector<isf> outputs;
  std::vector<std::string> output_names;

  unsigned num_inputs() const noexcept { return outputs.empty() ? 0u : outputs.front().num_vars(); }
};

/*! \brief Throws parse_error (with line and column) on malformed input. */
spec_set read_pla( std::string const& text, std::string name = "pla" );
spec_set read_pla_file( std::string const& path );

/*! \brief Type fr, one row per minterm that is a care point of some output. */
std::string write_pla( std::vector<isf> const& outputs, std::vector<std::string> const& output_names = {} );

/*! \brief a_bits + b_bits outputs, least-significant first; inputs are a (LSB first) then b (LSB first). */
std::vector<isf> gen_multiplier( unsigned a_bits, unsigned b_bits );

/*! \brief Output j is 1 iff at least j + 1 of the k inputs are 1. */
std::vector<isf> gen_sorting_net( unsigned k );

isf gen_parity( unsigned n );

/*! \brief 1 iff more than n/2 inputs are 1. */
isf gen_majority( unsigned n );

/*!
  \brief Column-wise pairing of two specifications

  Throws spec_error naming both specifications when the input or output
  counts differ.  Mode 2 takes the variable names of mode 1.
*/
std::vector<poly_function> make_poly_spec( spec_set const& mode1, spec_set const& mode2 );

/*!
  \brief Builds a specification from a descriptor

  `parity:N`, `majority:N`, `mul:AxB`, `sort:K` or `pla:PATH`; a suffix
  `@K` keeps only output K (0-based).
*/
spec_set load_spec( std::string const& descriptor );

} // namespace polysynth
