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

#include <polysynth/truth_table.hpp>

#include <polysynth/errors.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace polysynth
{

namespace
{

/* positions where variable i is 0, for i < 6 */
constexpr std::array<std::uint64_t, 6> low_masks = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

std::size_t num_words( unsigned num_vars )
{
  return num_vars <= 6u ? 1u : ( std::size_t{ 1 } << ( num_vars - 6u ) );
}

template<class Op>
truth_table quantify( truth_table const& t, unsigned var, Op op )
{
  if ( var >= t.num_vars() )
  {
    throw std::out_of_range( "variable index " + std::to_string( var ) + " out of range" );
  }
  truth_table r = t;
  auto w = r.words();
  if ( var < 6u )
  {
    auto const shift = 1u << var;
    auto const mask = low_masks[var];
    for ( auto& word : w )
    {
      auto const lo = word & mask;
      auto const hi = ( word >> shift ) & mask;
      auto const v = op( lo, hi );
      word = v | ( v << shift );
    }
    w[0] &= r.tail_mask();
  }
  else
  {
    auto const stride = std::size_t{ 1 } << ( var - 6u );
    for ( std::size_t j = 0; j < w.size(); j += 2 * stride )
    {
      for ( std::size_t k = 0; k < stride; ++k )
      {
        auto const v = op( w[j + k], w[j + k + stride] );
        w[j + k] = v;
        w[j + k + stride] = v;
      }
    }
  }
  return r;
}

} // namespace

truth_table::truth_table( unsigned num_vars )
    : num_vars_( num_vars )
{
  if ( num_vars > max_num_vars )
  {
    throw spec_error( "function has " + std::to_string( num_vars ) + " variables; the cap is " +
                      std::to_string( max_num_vars ) );
  }
  words_.assign( num_words( num_vars ), 0u );
}

truth_table truth_table::ones( unsigned num_vars )
{
  truth_table t( num_vars );
  std::fill( t.words_.begin(), t.words_.end(), ~std::uint64_t{ 0 } );
  t.words_[0] &= t.tail_mask();
  return t;
}

truth_table truth_table::nth_var( unsigned num_vars, unsigned var )
{
  if ( var >= num_vars )
  {
    throw std::out_of_range( "variable index out of range" );
  }
  truth_table t( num_vars );
  if ( var < 6u )
  {
    for ( auto& w : t.words_ )
      w = ~low_masks[var];
    t.words_[0] &= t.tail_mask();
  }
  else
  {
    auto const stride = std::size_t{ 1 } << ( var - 6u );
    for ( std::size_t j = 0; j < t.words_.size(); ++j )
      t.words_[j] = ( j & stride ) ? ~std::uint64_t{ 0 } : 0u;
  }
  return t;
}

bool truth_table::any() const noexcept
{
  return std::any_of( words_.begin(), words_.end(), []( auto w ) { return w != 0u; } );
}

std::uint64_t truth_table::count() const noexcept
{
  std::uint64_t c = 0;
  for ( auto w : words_ )
    c += static_cast<std::uint64_t>( std::popcount( w ) );
  return c;
}

void truth_table::check_same_size( truth_table const& other ) const
{
  if ( other.num_vars_ != num_vars_ )
  {
    throw std::invalid_argument( "truth tables over different variable counts" );
  }
}

truth_table& truth_table::operator&=( truth_table const& other )
{
  check_same_size( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    words_[i] &= other.words_[i];
  return *this;
}

truth_table& truth_table::operator|=( truth_table const& other )
{
  check_same_size( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    words_[i] |= other.words_[i];
  return *this;
}

truth_table& truth_table::operator^=( truth_table const& other )
{
  check_same_size( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    words_[i] ^= other.words_[i];
  return *this;
}

truth_table& truth_table::and_not( truth_table const& other )
{
  check_same_size( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    words_[i] &= ~other.words_[i];
  return *this;
}

truth_table truth_table::operator~() const
{
  truth_table r = *this;
  for ( auto& w : r.words_ )
    w = ~w;
  r.words_[0] &= r.tail_mask();
  return r;
}

truth_table exists_var( truth_table const& t, unsigned var )
{
  return quantify( t, var, []( std::uint64_t a, std::uint64_t b ) { return a | b; } );
}

truth_table forall_var( truth_table const& t, unsigned var )
{
  return quantify( t, var, []( std::uint64_t a, std::uint64_t b ) { return a & b; } );
}

truth_table cofactor( truth_table const& t, unsigned var, bool value )
{
  if ( var >= t.num_vars() )
  {
    throw std::out_of_range( "variable index " + std::to_string( var ) + " out of range" );
  }
  truth_table r( t.num_vars() - 1u );
  auto const src = t.words();
  auto dst = r.words();
  if ( var >= 6u )
  {
    auto const stride = std::size_t{ 1 } << ( var - 6u );
    std::size_t out = 0;
    for ( std::size_t j = 0; j < src.size(); j += 2 * stride )
    {
      for ( std::size_t k = 0; k < stride; ++k )
        dst[out++] = src[j + k + ( value ? stride : 0u )];
    }
    return r;
  }

  if ( t.num_vars() <= 6u )
  {
    for ( std::uint64_t m = 0; m < r.num_bits(); ++m )
    {
      auto const low = m & ( ( std::uint64_t{ 1 } << var ) - 1u );
      auto const high = ( m >> var ) << ( var + 1u );
      auto const src_m = high | low | ( std::uint64_t{ value } << var );
      if ( t.get( src_m ) )
        r.set( m );
    }
    return r;
  }

  /* var < 6 and at least two source words: each source word yields 32 result bits */
  auto const shift = 1u << var;
  auto const mask = low_masks[var];
  for ( std::size_t j = 0; j < src.size(); ++j )
  {
    auto word = value ? ( ( src[j] >> shift ) & mask ) : ( src[j] & mask );
    std::uint64_t packed = 0;
    unsigned out_bit = 0;
    for ( unsigned b = 0; b < 64u; ++b )
    {
      if ( ( mask >> b ) & 1u )
      {
        packed |= ( ( word >> b ) & 1u ) << out_bit;
        ++out_bit;
      }
    }
    dst[j >> 1] |= packed << ( ( j & 1u ) * 32u );
  }
  return r;
}

truth_table append_var( truth_table const& low, truth_table const& high )
{
  if ( low.num_vars() != high.num_vars() )
  {
    throw std::invalid_argument( "append_var: mismatched variable counts" );
  }
  truth_table r( low.num_vars() + 1u );
  auto dst = r.words();
  if ( low.num_vars() < 6u )
  {
    dst[0] = low.words()[0] | ( high.words()[0] << low.num_bits() );
    return r;
  }
  auto const lw = low.words();
  auto const hw = high.words();
  std::copy( lw.begin(), lw.end(), dst.begin() );
  std::copy( hw.begin(), hw.end(), dst.begin() + static_cast<std::ptrdiff_t>( lw.size() ) );
  return r;
}

truth_table insert_var( truth_table const& t, unsigned var )
{
  if ( var > t.num_vars() )
  {
    throw std::out_of_range( "insert_var: position out of range" );
  }
  truth_table r( t.num_vars() + 1u );
  for ( std::uint64_t m = 0; m < r.num_bits(); ++m )
  {
    auto const low = m & ( ( std::uint64_t{ 1 } << var ) - 1u );
    auto const high = ( m >> ( var + 1u ) ) << var;
    if ( t.get( high | low ) )
      r.set( m );
  }
  return r;
}

bool depends_on( truth_table const& t, unsigned var )
{
  return cofactor( t, var, false ) != cofactor( t, var, true );
}

} // namespace polysynth
