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
  \file boolfn.hpp
  \brief Incompletely specified Boolean functions and two-mode functions

  An `isf` stores disjoint on- and off-sets over an ordered variable list;
  every other minterm is a don't-care.  Derived functions (quantified,
  decomposition children) keep the variable space of their parent and are
  simply independent of the variables they do not use; only `cofactor`,
  `project`, `merge_modes` and `split_modes` change the number of variables.
*/

#pragma once

#include <polysynth/truth_table.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polysynth
{

/*! \brief Ascending list of unique variable indices. */
using var_set = std::vector<unsigned>;

enum class care_value : std::uint8_t
{
  off,
  on,
  dont_care
};

std::vector<std::string> default_var_names( unsigned num_vars, unsigned first_index = 1u );

class isf
{
public:
  isf() = default;

  /*! \brief All-don't-care function over `num_vars` variables named x1, x2, ... */
  explicit isf( unsigned num_vars );

  /*! \brief Throws std::invalid_argument if the sets overlap or the sizes disagree. */
  isf( truth_table on, truth_table off, std::vector<std::string> var_names = {} );

  /*! \brief Fully specified function. */
  static isf from_function( truth_table const& function, std::vector<std::string> var_names = {} );

  unsigned num_vars() const noexcept { return on_.num_vars(); }
  truth_table const& on() const noexcept { return on_; }
  truth_table const& off() const noexcept { return off_; }
  truth_table care() const { return on_ | off_; }
  truth_table dont_cares() const { return ~care(); }
  std::vector<std::string> const& var_names() const noexcept { return names_; }
  void set_var_names( std::vector<std::string> names );

  care_value value( std::uint64_t minterm ) const noexcept
  {
    return on_.get( minterm ) ? care_value::on : ( off_.get( minterm ) ? care_value::off : care_value::dont_care );
  }

  void set( std::uint64_t minterm, care_value v );

  bool operator==( isf const& other ) const = default;

private:
  truth_table on_;
  truth_table off_;
  std::vector<std::string> names_;
};

/*! \brief Ordered pair (mode 1, mode 2) over the same variables. */
class poly_function
{
public:
  poly_function() = default;
  poly_function( isf mode1, isf mode2 );

  isf const& mode1() const noexcept { return mode1_; }
  isf const& mode2() const noexcept { return mode2_; }
  isf const& mode( unsigned m ) const noexcept { return m == 1u ? mode1_ : mode2_; }
  unsigned num_vars() const noexcept { return mode1_.num_vars(); }
  std::vector<std::string> const& var_names() const noexcept { return mode1_.var_names(); }

  bool operator==( poly_function const& other ) const = default;

private:
  isf mode1_;
  isf mode2_;
};

enum class completion_policy
{
  all_zero,
  all_one,
  nearest_care /*!< value of the closest care minterm by Hamming distance, lowest index on ties */
};

/*! \brief Fixes variable `var` and drops it; remaining variables keep their relative order. */
isf cofactor( isf const& f, unsigned var, bool value );

/*! \brief on: every extension over `vars` is on; off: some extension is off. */
isf forall_quant( isf const& f, var_set const& vars );

/*! \brief on: some extension over `vars` is on; off: every extension is off. */
isf exists_quant( isf const& f, var_set const& vars );

isf complement( isf const& f );

/*! \brief Common refinement of two compatible functions (union of on-sets, union of off-sets). */
isf refine( isf const& f, isf const& g );

/*! \brief True iff a common completion exists (no on-point of one is an off-point of the other). */
bool equal_on_care( isf const& f, isf const& g );

/*! \brief True iff every completion must depend on `var`, i.e. the two cofactors are incompatible. */
bool depends_on( isf const& f, unsigned var );

/*!
  \brief Support computed greedily in ascending variable order

  A variable is dropped when the two cofactors are compatible; the refined
  function (cofactors merged) is then used for the remaining variables.
  `reduce_support` returns that refinement in the original variable space.
*/
var_set support( isf const& f );
std::pair<isf, var_set> reduce_support( isf const& f );

/*! \brief Joint variant for both modes: a variable is dropped only if it is removable in each mode. */
std::pair<poly_function, var_set> reduce_support( poly_function const& pf );

std::optional<bool> is_constant( isf const& f );
std::uint64_t care_count( isf const& f );
isf complete( isf const& f, completion_policy policy );

/*! \brief Restriction to `keep`: dropped variables are fixed to 0 (callers use it on independent variables). */
isf project( isf const& f, var_set const& keep );

/*!
  \brief f' over num_vars + 1 variables; the mode variable is appended as the highest index

  Cofactor 0 of the mode variable is mode 1, cofactor 1 is mode 2.
*/
isf merge_modes( poly_function const& pf );

/*! \brief Name used for the appended mode variable (x0, or a variant if x0 is taken). */
std::string mode_var_name( std::vector<std::string> const& names );

poly_function split_modes( isf const& f, unsigned mode_var );

var_set set_union( var_set const& a, var_set const& b );
var_set set_difference( var_set const& a, var_set const& b );
bool contains( var_set const& s, unsigned v );

} // namespace polysynth
