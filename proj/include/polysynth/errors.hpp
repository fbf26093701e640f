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
  \file errors.hpp
  \brief Exception types shared by all polysynth modules
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polysynth
{

/*! \brief Malformed or inconsistent input specification (bad PLA, arity mismatch, ...). */
class spec_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Text parse failure with a 1-based source location. */
class parse_error : public spec_error
{
public:
  parse_error( std::string const& what, std::size_t line, std::size_t column )
      : spec_error( "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + what ),
        line_( line ),
        column_( column )
  {
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/*! \brief A configured resource cap (cells, recursion depth) was exceeded. */
class resource_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Broken internal invariant; indicates a bug. */
class internal_error : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace polysynth
