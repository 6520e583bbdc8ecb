#pragma once

#include <set>
#include <string>
#include <vector>

namespace pltl
{

/// A letter is the set of propositions that hold at one position.
using letter = std::set<std::string>;
using finite_word = std::vector<letter>;

/// Brace notation, e.g. `{p,q}` or `{}`.
[[nodiscard]] inline std::string to_string( const letter& l )
{
  std::string out = "{";
  bool first = true;
  for ( const auto& p : l )
  {
    if ( !first )
    {
      out += ',';
    }
    out += p;
    first = false;
  }
  return out + "}";
}

} // namespace pltl
