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
  \file truth_table.hpp
  \brief Dense truth tables over up to 24 variables

  Minterm index m encodes an assignment: variable i takes bit i of m
  (variable 0 is the least-significant bit).
*/

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polysynth
{

inline constexpr unsigned max_num_vars = 24u;

class truth_table
{
public:
  truth_table() : truth_table( 0u ) {}

  /*! \brief Constant-0 table over `num_vars` variables; throws spec_error above the cap. */
  explicit truth_table( unsigned num_vars );

  static truth_table ones( unsigned num_vars );
  static truth_table nth_var( unsigned num_vars, unsigned var );

  unsigned num_vars() const noexcept { return num_vars_; }
  std::uint64_t num_bits() const noexcept { return std::uint64_t{ 1 } << num_vars_; }

  bool get( std::uint64_t minterm ) const noexcept
  {
    return ( words_[minterm >> 6] >> ( minterm & 63u ) ) & 1u;
  }

  void set( std::uint64_t minterm, bool value = true ) noexcept
  {
    auto const bit = std::uint64_t{ 1 } << ( minterm & 63u );
    if ( value )
      words_[minterm >> 6] |= bit;
    else
      words_[minterm >> 6] &= ~bit;
  }

  std::span<std::uint64_t const> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::uint64_t count() const noexcept;

  truth_table& operator&=( truth_table const& other );
  truth_table& operator|=( truth_table const& other );
  truth_table& operator^=( truth_table const& other );
  truth_table& and_not( truth_table const& other );

  friend truth_table operator&( truth_table a, truth_table const& b ) { return a &= b; }
  friend truth_table operator|( truth_table a, truth_table const& b ) { return a |= b; }
  friend truth_table operator^( truth_table a, truth_table const& b ) { return a ^= b; }
  truth_table operator~() const;

  bool operator==( truth_table const& other ) const = default;

  /*! \brief Bit mask of valid positions in a single word (tables with fewer than 6 variables). */
  std::uint64_t tail_mask() const noexcept
  {
    return num_vars_ >= 6u ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << num_bits() ) - 1u );
  }

private:
  void check_same_size( truth_table const& other ) const;

  unsigned num_vars_{};
  std::vector<std::uint64_t> words_;
};

/*! \brief Result depends on nothing but the other variables: t(m) | t(m ^ 2^var). */
truth_table exists_var( truth_table const& t, unsigned var );

/*! \brief Result depends on nothing but the other variables: t(m) & t(m ^ 2^var). */
truth_table forall_var( truth_table const& t, unsigned var );

/*! \brief Removes `var`, compacting higher variables down by one position. */
truth_table cofactor( truth_table const& t, unsigned var, bool value );

/*! \brief Table over num_vars + 1 variables equal to `low` when the new top variable is 0 and `high` when it is 1. */
truth_table append_var( truth_table const& low, truth_table const& high );

/*! \brief Inserts an independent variable at position `var`, shifting higher ones up. */
truth_table insert_var( truth_table const& t, unsigned var );

bool depends_on( truth_table const& t, unsigned var );

} // namespace polysynth
