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

#include <polysynth/flow.hpp>

#include <polysynth/errors.hpp>

#include <exception>

namespace polysynth
{

std::string method_name( synthesis_method m )
{
  return m == synthesis_method::poly_bidec ? "poly-bidec" : "xform-bidec";
}

std::optional<synthesis_method> parse_method( std::string const& name )
{
  if ( name == "poly-bidec" )
    return synthesis_method::poly_bidec;
  if ( name == "xform-bidec" )
    return synthesis_method::xform_bidec;
  return std::nullopt;
}

synthesis_result synthesize( std::vector<poly_function> const& specs, std::vector<std::string> const& output_names,
                             synthesis_method method, poly_options const& options, bool keep_log )
{
  if ( specs.empty() )
  {
    throw spec_error( "specification has no outputs" );
  }
  auto const count = static_cast<std::int64_t>( specs.size() );
  std::vector<netlist> parts( specs.size() );
  std::vector<rule_log> logs( specs.size() );
  std::vector<std::exception_ptr> errors( specs.size() );

#pragma omp parallel for schedule( dynamic )
  for ( std::int64_t o = 0; o < count; ++o )
  {
    auto const i = static_cast<std::size_t>( o );
    try
    {
      if ( method == synthesis_method::poly_bidec )
        parts[i] = poly_design( specs[i], options );
      else
        parts[i] = transform_design( specs[i], options, keep_log ? &logs[i] : nullptr );
      parts[i].outputs.at( 0 ).name = i < output_names.size() ? output_names[i] : "y" + std::to_string( i );
    }
    catch ( ... )
    {
      errors[i] = std::current_exception();
    }
  }

  for ( auto const& e : errors )
    if ( e )
      std::rethrow_exception( e );

  synthesis_result result;
  result.net = combine( parts );
  for ( auto& l : logs )
    for ( auto& app : l )
      result.log.push_back( std::move( app ) );
  return result;
}

} // namespace polysynth
