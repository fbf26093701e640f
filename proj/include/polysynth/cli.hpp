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
  \file cli.hpp
  \brief Command-line front end (synth, verify, bench, compare)

  Exit codes: 0 success, 1 verification failure, 2 specification or usage
  error, 3 resource cap exceeded.
*/

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polysynth
{

enum exit_code : int
{
  exit_ok = 0,
  exit_verify_failed = 1,
  exit_spec_error = 2,
  exit_resource = 3
};

/*! \brief Reference numbers published for one benchmark and method. */
struct published_reference
{
  std::optional<unsigned> gates;
  std::string bracket; /*!< percentage ("8.6%") or polymorphic-cell count, as reported */
};

struct suite_entry
{
  std::string benchmark;
  std::string mode1; /*!< generator descriptor */
  std::string mode2;
  published_reference poly_ref;
  published_reference xform_ref;
};

/*! \brief Built-in suites: table2, table3, table4, trend; otherwise a comma list of GEN1/GEN2 pairs. */
std::vector<suite_entry> resolve_suite( std::string const& suite, std::string const& mcnc_dir );

/*! \brief `args` excludes the program name. */
int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace polysynth
