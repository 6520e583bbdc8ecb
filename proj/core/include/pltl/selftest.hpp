#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pltl
{

struct suite_result
{
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  double seconds = 0.0;
  /// First few counterexamples, human readable.
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const noexcept { return passed == total; }
};

/// holds(f, w, 0) iff af_ext(f, w[0, t)) holds on the suffix w_t.
[[nodiscard]] suite_result run_after_suite( std::uint64_t seed, std::size_t count );
/// holds(f, w, t) iff f rewritten under the composed entailed set holds on w_t.
[[nodiscard]] suite_result run_entailment_suite( std::uint64_t seed, std::size_t count );
/// Direct evaluation agrees with the three stability premises.
[[nodiscard]] suite_result run_master_suite( std::uint64_t seed, std::size_t count );
/// Corpus formulas: automaton membership agrees with evaluation on random words.
[[nodiscard]] suite_result run_translation_suite( std::uint64_t seed, std::size_t words_per_formula,
                                                  std::size_t max_states = 200000 );

[[nodiscard]] const std::vector<std::string>& suite_names();
/// Dispatch by name; `count` is the case count (words per formula for the translation suite).
/// Throws `std::invalid_argument` for unknown names.
[[nodiscard]] suite_result run_suite( const std::string& name, std::uint64_t seed, std::size_t count );

} // namespace pltl
