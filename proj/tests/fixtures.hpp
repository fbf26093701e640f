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
  \file fixtures.hpp
  \brief Karnaugh-map fixtures of the 4-bit parity / majority example

  Maps are written row by row, rows and columns in Gray-code order.  On
  the library side x1..x4 are variables 0..3 and the mode variable x0 is
  variable 4.
*/

#pragma once

#include <polysynth/boolfn.hpp>

#include <string>
#include <vector>

namespace polysynth::fixtures
{

/*!
  \brief Decodes a map; '*' marks a don't-care

  `row_vars` / `col_vars` name the variable index of each label character
  (leftmost first).
*/
inline isf karnaugh( unsigned num_vars, std::vector<unsigned> const& row_vars, std::vector<std::string> const& row_labels,
                     std::vector<unsigned> const& col_vars, std::vector<std::string> const& col_labels,
                     std::vector<std::string> const& rows )
{
  truth_table on( num_vars ), off( num_vars );
  for ( std::size_t r = 0; r < rows.size(); ++r )
  {
    for ( std::size_t c = 0; c < col_labels.size(); ++c )
    {
      std::uint64_t m = 0;
      for ( std::size_t k = 0; k < row_vars.size(); ++k )
        if ( row_labels[r][k] == '1' )
          m |= std::uint64_t{ 1 } << row_vars[k];
      for ( std::size_t k = 0; k < col_vars.size(); ++k )
        if ( col_labels[c][k] == '1' )
          m |= std::uint64_t{ 1 } << col_vars[k];
      auto const ch = rows[r][c];
      if ( ch == '1' )
        on.set( m );
      else if ( ch == '0' )
        off.set( m );
    }
  }
  return isf( on, off );
}

inline std::vector<std::string> const gray2 = { "00", "01", "11", "10" };
inline std::vector<std::string> const gray3 = { "000", "001", "011", "010", "100", "101", "111", "110" };

/* rows x1 x2, columns x3 x4 */
inline isf parity4_map()
{
  return karnaugh( 4, { 0, 1 }, gray2, { 2, 3 }, gray2, { "0101", "1010", "0101", "1010" } );
}

inline isf majority4_map()
{
  return karnaugh( 4, { 0, 1 }, gray2, { 2, 3 }, gray2, { "0000", "0010", "0111", "0010" } );
}

/* rows x0 x1 x2, columns x3 x4 */
inline isf merged_map()
{
  return karnaugh( 5, { 4, 0, 1 }, gray3, { 2, 3 }, gray2,
                   { "0101", "1010", "0101", "1010", "0000", "0010", "0111", "0010" } );
}

/* r'(x0, x1, x2, x3): rows x0 x1 x2, column x3; embedded in the 5-variable space */
inline isf merged_r_map()
{
  return karnaugh( 5, { 4, 0, 1 }, gray3, { 2 }, { "0", "1" }, { "00", "00", "00", "00", "00", "00", "01", "00" } );
}

inline isf merged_h_map()
{
  return karnaugh( 5, { 4, 0, 1 }, gray3, { 2, 3 }, gray2,
                   { "0101", "1010", "0101", "1010", "0000", "0010", "01**", "0010" } );
}

/* mode 2 of h: rows x1 x2, columns x3 x4 */
inline isf h2_map()
{
  return karnaugh( 4, { 0, 1 }, gray2, { 2, 3 }, gray2, { "0000", "0010", "01**", "0010" } );
}

/* mode 2 of r: rows x1 x2, column x3; x4 unused */
inline isf r2_map()
{
  return karnaugh( 4, { 0, 1 }, gray2, { 2 }, { "0", "1" }, { "00", "00", "01", "00" } );
}

} // namespace polysynth::fixtures
