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

#include <polysynth/boolfn.hpp>

#include <polysynth/errors.hpp>

#include <algorithm>
#include <stdexcept>

namespace polysynth
{

std::vector<std::string> default_var_names( unsigned num_vars, unsigned first_index )
{
  std::vector<std::string> names;
  names.reserve( num_vars );
  for ( auto i = 0u; i < num_vars; ++i )
    names.push_back( "x" + std::to_string( i + first_index ) );
  return names;
}

isf::isf( unsigned num_vars )
    : on_( num_vars ), off_( num_vars ), names_( default_var_names( num_vars ) )
{
}

isf::isf( truth_table on, truth_table off, std::vector<std::string> var_names )
    : on_( std::move( on ) ), off_( std::move( off ) ), names_( std::move( var_names ) )
{
  if ( on_.num_vars() != off_.num_vars() )
  {
    throw std::invalid_argument( "isf: on-set and off-set have different sizes" );
  }
  if ( ( on_ & off_ ).any() )
  {
    throw std::invalid_argument( "isf: on-set and off-set overlap" );
  }
  if ( names_.empty() )
  {
    names_ = default_var_names( on_.num_vars() );
  }
  if ( names_.size() != on_.num_vars() )
  {
    throw std::invalid_argument( "isf: wrong number of variable names" );
  }
}

isf isf::from_function( truth_table const& function, std::vector<std::string> var_names )
{
  return isf( function, ~function, std::move( var_names ) );
}

void isf::set_var_names( std::vector<std::string> names )
{
  if ( names.size() != num_vars() )
  {
    throw std::invalid_argument( "isf: wrong number of variable names" );
  }
  names_ = std::move( names );
}

void isf::set( std::uint64_t minterm, care_value v )
{
  on_.set( minterm, v == care_value::on );
  off_.set( minterm, v == care_value::off );
}

poly_function::poly_function( isf mode1, isf mode2 )
    : mode1_( std::move( mode1 ) ), mode2_( std::move( mode2 ) )
{
  if ( mode1_.num_vars() != mode2_.num_vars() )
  {
    throw spec_error( "mode functions have different input counts (" + std::to_string( mode1_.num_vars() ) +
                      " vs " + std::to_string( mode2_.num_vars() ) + ")" );
  }
  if ( mode1_.var_names() != mode2_.var_names() )
  {
    mode2_.set_var_names( mode1_.var_names() );
  }
}

namespace
{

void check_var( isf const& f, unsigned var )
{
  if ( var >= f.num_vars() )
  {
    throw std::out_of_range( "variable index " + std::to_string( var ) + " out of range for a " +
                             std::to_string( f.num_vars() ) + "-variable function" );
  }
}

std::vector<std::string> drop_name( std::vector<std::string> names, unsigned var )
{
  names.erase( names.begin() + var );
  return names;
}

} // namespace

isf cofactor( isf const& f, unsigned var, bool value )
{
  check_var( f, var );
  return isf( cofactor( f.on(), var, value ), cofactor( f.off(), var, value ), drop_name( f.var_names(), var ) );
}

isf forall_quant( isf const& f, var_set const& vars )
{
  auto on = f.on();
  auto off = f.off();
  for ( auto v : vars )
  {
    check_var( f, v );
    on = forall_var( on, v );
    off = exists_var( off, v );
  }
  return isf( std::move( on ), std::move( off ), f.var_names() );
}

isf exists_quant( isf const& f, var_set const& vars )
{
  auto on = f.on();
  auto off = f.off();
  for ( auto v : vars )
  {
    check_var( f, v );
    on = exists_var( on, v );
    off = forall_var( off, v );
  }
  return isf( std::move( on ), std::move( off ), f.var_names() );
}

isf complement( isf const& f )
{
  return isf( f.off(), f.on(), f.var_names() );
}

isf refine( isf const& f, isf const& g )
{
  return isf( f.on() | g.on(), f.off() | g.off(), f.var_names() );
}

bool equal_on_care( isf const& f, isf const& g )
{
  if ( f.num_vars() != g.num_vars() )
  {
    return false;
  }
  return ( f.on() & g.off() ).none() && ( f.off() & g.on() ).none();
}

bool depends_on( isf const& f, unsigned var )
{
  check_var( f, var );
  return ( exists_var( f.on(), var ) & exists_var( f.off(), var ) ).any();
}

std::pair<isf, var_set> reduce_support( isf const& f )
{
  auto on = f.on();
  auto off = f.off();
  var_set kept;
  for ( auto v = 0u; v < f.num_vars(); ++v )
  {
    auto merged_on = exists_var( on, v );
    auto merged_off = exists_var( off, v );
    if ( ( merged_on & merged_off ).any() )
    {
      kept.push_back( v );
      continue;
    }
    on = std::move( merged_on );
    off = std::move( merged_off );
  }
  return { isf( std::move( on ), std::move( off ), f.var_names() ), std::move( kept ) };
}

std::pair<poly_function, var_set> reduce_support( poly_function const& pf )
{
  truth_table on[2] = { pf.mode1().on(), pf.mode2().on() };
  truth_table off[2] = { pf.mode1().off(), pf.mode2().off() };
  var_set kept;
  for ( auto v = 0u; v < pf.num_vars(); ++v )
  {
    truth_table mon[2] = { exists_var( on[0], v ), exists_var( on[1], v ) };
    truth_table moff[2] = { exists_var( off[0], v ), exists_var( off[1], v ) };
    if ( ( mon[0] & moff[0] ).any() || ( mon[1] & moff[1] ).any() )
    {
      kept.push_back( v );
      continue;
    }
    for ( auto m = 0; m < 2; ++m )
    {
      on[m] = std::move( mon[m] );
      off[m] = std::move( moff[m] );
    }
  }
  auto const& names = pf.var_names();
  return { poly_function( isf( std::move( on[0] ), std::move( off[0] ), names ),
                          isf( std::move( on[1] ), std::move( off[1] ), names ) ),
           std::move( kept ) };
}

var_set support( isf const& f )
{
  return reduce_support( f ).second;
}

std::optional<bool> is_constant( isf const& f )
{
  if ( f.on().none() )
    return false;
  if ( f.off().none() )
    return true;
  return std::nullopt;
}

std::uint64_t care_count( isf const& f )
{
  return f.on().count() + f.off().count();
}

isf complete( isf const& f, completion_policy policy )
{
  switch ( policy )
  {
  case completion_policy::all_zero:
    return isf( f.on(), ~f.on(), f.var_names() );
  case completion_policy::all_one:
    return isf( ~f.off(), f.off(), f.var_names() );
  case completion_policy::nearest_care:
    break;
  }

  /* multi-source breadth-first fill over the Boolean cube */
  auto on = f.on();
  auto known = f.care();
  if ( known.none() )
  {
    return complete( f, completion_policy::all_zero );
  }
  while ( known.count() < known.num_bits() )
  {
    auto next_on = on;
    auto next_known = known;
    for ( std::uint64_t m = 0; m < known.num_bits(); ++m )
    {
      if ( known.get( m ) )
        continue;
      for ( auto v = 0u; v < f.num_vars(); ++v )
      {
        auto const n = m ^ ( std::uint64_t{ 1 } << v );
        if ( known.get( n ) )
        {
          next_known.set( m );
          next_on.set( m, on.get( n ) );
          break;
        }
      }
    }
    on = std::move( next_on );
    known = std::move( next_known );
  }
  return isf( on, ~on, f.var_names() );
}

isf project( isf const& f, var_set const& keep )
{
  isf r = f;
  for ( auto v = f.num_vars(); v-- > 0u; )
  {
    if ( !contains( keep, v ) )
    {
      r = cofactor( r, v, false );
    }
  }
  return r;
}

std::string mode_var_name( std::vector<std::string> const& names )
{
  std::string name = "x0";
  while ( std::find( names.begin(), names.end(), name ) != names.end() )
  {
    name += "_mode";
  }
  return name;
}

isf merge_modes( poly_function const& pf )
{
  if ( pf.num_vars() + 1u > max_num_vars )
  {
    throw spec_error( "merging the modes needs " + std::to_string( pf.num_vars() + 1u ) +
                      " variables; the cap is " + std::to_string( max_num_vars ) );
  }
  auto names = pf.var_names();
  names.push_back( mode_var_name( pf.var_names() ) );
  return isf( append_var( pf.mode1().on(), pf.mode2().on() ), append_var( pf.mode1().off(), pf.mode2().off() ),
              std::move( names ) );
}

poly_function split_modes( isf const& f, unsigned mode_var )
{
  check_var( f, mode_var );
  return poly_function( cofactor( f, mode_var, false ), cofactor( f, mode_var, true ) );
}

var_set set_union( var_set const& a, var_set const& b )
{
  var_set r;
  std::set_union( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( r ) );
  return r;
}

var_set set_difference( var_set const& a, var_set const& b )
{
  var_set r;
  std::set_difference( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( r ) );
  return r;
}

bool contains( var_set const& s, unsigned v )
{
  return std::binary_search( s.begin(), s.end(), v );
}

} // namespace polysynth
