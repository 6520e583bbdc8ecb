#pragma once

#include <string>
#include <vector>

namespace pltl
{

struct corpus_entry
{
  std::string name;
  std::string text;
};

/// Fixed formulas for end-to-end checks, from constants to mixed past and future properties.
[[nodiscard]] const std::vector<corpus_entry>& corpus();

/// The example property with past operators: p holds exactly once q and r both have held.
[[nodiscard]] const std::string& intro_pltl();
/// The same property written without past operators.
[[nodiscard]] const std::string& intro_ltl();

} // namespace pltl
