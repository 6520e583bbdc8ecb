#pragma once

#include <pltl/automaton.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pltl
{

class hoa_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// HOA v1 with state-based acceptance and one explicit edge per letter.
[[nodiscard]] std::string export_hoa( const omega_automaton& a, std::string_view name = {} );

/// Graphviz digraph; edges to the same target are merged into one label.
[[nodiscard]] std::string export_dot( const omega_automaton& a );

/// Reads back the HOA subset written by `export_hoa`: explicit labels that are
/// conjunctions of literals or `t`, state-based Buchi, co-Buchi or Rabin
/// acceptance. Throws `hoa_error` on anything else.
[[nodiscard]] omega_automaton parse_hoa( std::string_view text );

} // namespace pltl
