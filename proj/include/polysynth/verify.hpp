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
  \file verify.hpp
  \brief Two-mode verification of netlists against poly_function specs

  `verify` is the bit-parallel kernel (64 assignments per word, blocks
  distributed with OpenMP); `verify_serial` is the straightforward
  one-assignment-at-a-time reference kept for testing and benchmarking.
  Both report the same first counterexample, ordered by assignment index,
  then mode, then output.
*/

#pragma once

#include <polysynth/boolfn.hpp>
#include <polysynth/netlist.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace polysynth
{

struct verify_options
{
  unsigned exhaustive_limit{ 14u };
  std::uint64_t samples{ 1u << 16 };
  std::uint64_t seed{ 1u };
};

struct counterexample
{
  std::size_t output{};
  std::uint64_t minterm{};
  std::vector<bool> assignment;
  unsigned mode{};
  bool expected{};
  bool actual{};
};

struct verify_report
{
  bool pass{};
  bool exhaustive{};
  std::uint64_t checks{};
  std::optional<counterexample> failure;
};

verify_report verify( netlist const& n, std::vector<poly_function> const& specs, verify_options const& options = {} );
verify_report verify_serial( netlist const& n, std::vector<poly_function> const& specs,
                             verify_options const& options = {} );

/*! \brief Assignments examined by the sampling path (deterministic in `seed`). */
std::vector<std::uint64_t> sample_minterms( unsigned num_vars, std::uint64_t samples, std::uint64_t seed );

/*! \brief Caps OpenMP parallelism; 0 keeps the runtime default. */
void set_thread_limit( unsigned threads );

} // namespace polysynth
