#pragma once

#include <pltl/formula.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pltl
{

class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& message, std::size_t position )
      : std::runtime_error( message + " at position " + std::to_string( position ) ), _position( position )
  {
  }

  [[nodiscard]] std::size_t position() const noexcept { return _position; }

private:
  std::size_t _position;
};

/// Parses the surface syntax into an NNF formula.
///
/// Precedence from loosest to tightest: `<->` (left), `->` (right), `|`, `&`,
/// the binary temporal operators `U W R M S wS B wB` (right), and the prefix
/// operators `! X Y wY F G O H`. Each uppercase letter is its own token, so
/// `GFp` reads as `G F p`.
[[nodiscard]] formula parse( std::string_view text );

} // namespace pltl
