#pragma once

#include <pltl/formula.hpp>
#include <pltl/letter.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pltl
{

/// Ultimately periodic word u v^omega with non-empty v.
struct lasso_word
{
  finite_word prefix;
  finite_word period;

  [[nodiscard]] const letter& at( std::size_t t ) const;
  /// Position within prefix, or |u| plus the offset within the period.
  [[nodiscard]] std::size_t phase( std::size_t t ) const noexcept;
  [[nodiscard]] finite_word slice( std::size_t from, std::size_t to ) const;

  friend bool operator==( const lasso_word&, const lasso_word& ) = default;
};

/// Parses `prefix ; period`, each a comma-separated list of brace sets.
/// The prefix may be empty; the period may not.
[[nodiscard]] lasso_word parse_lasso( std::string_view text );
[[nodiscard]] std::string to_string( const lasso_word& w );

/// The suffix w_t as a lasso word.
[[nodiscard]] lasso_word suffix( const lasso_word& w, std::size_t t );

/// Ultimately periodic truth sequence: bits[t] for t < threshold, then
/// bits[threshold + (t - threshold) mod period].
struct periodic_bits
{
  std::size_t threshold = 0;
  std::size_t period = 1;
  std::vector<bool> bits;

  [[nodiscard]] bool value( std::size_t t ) const;
  /// Minimal threshold, then minimal period.
  [[nodiscard]] periodic_bits canonical() const;

  friend bool operator==( const periodic_bits&, const periodic_bits& ) = default;
};

/// Exact truth sequences of formulas over one lasso word, memoized per node.
class evaluator
{
public:
  explicit evaluator( lasso_word w );

  [[nodiscard]] const lasso_word& word() const noexcept { return _word; }
  [[nodiscard]] const periodic_bits& eval( formula f );
  [[nodiscard]] bool holds( formula f, std::size_t t ) { return eval( f ).value( t ); }

private:
  periodic_bits compute( formula f );

  lasso_word _word;
  std::unordered_map<formula, periodic_bits> _cache;
};

[[nodiscard]] periodic_bits eval( formula f, const lasso_word& w );
[[nodiscard]] bool holds( formula f, const lasso_word& w, std::size_t t );

/// Entailed sets C_t and their compositions along a lasso word.
///
/// Past the prefix the pair (composed set, phase) is eventually periodic;
/// indices beyond the stored range wrap into the detected loop.
class entailment_trace
{
public:
  entailment_trace( formula f, const lasso_word& w );

  [[nodiscard]] const formula_set& entailed( std::size_t t ) const { return _entailed[index( t )]; }
  [[nodiscard]] const formula_set& composed( std::size_t t ) const { return _composed[index( t )]; }
  /// C_0, ..., C_t
  [[nodiscard]] std::vector<formula_set> entailed_sequence( std::size_t t ) const;

  [[nodiscard]] std::size_t loop_start() const noexcept { return _loop_start; }
  [[nodiscard]] std::size_t loop_length() const noexcept { return _entailed.size() - _loop_start; }

private:
  [[nodiscard]] std::size_t index( std::size_t t ) const noexcept;

  std::vector<formula_set> _entailed;
  std::vector<formula_set> _composed;
  std::size_t _loop_start = 0;
};

[[nodiscard]] formula_set entailed_set( formula f, const lasso_word& w, std::size_t t );
[[nodiscard]] formula_set composed_entailed( formula f, const lasso_word& w, std::size_t t );

struct limit_sets
{
  formula_set f;  // mu-subformulae eventually satisfied
  formula_set gf; // mu-subformulae satisfied infinitely often
  formula_set g;  // nu-subformulae always satisfied
  formula_set fg; // nu-subformulae almost always satisfied
};

[[nodiscard]] limit_sets compute_limit_sets( formula f, const lasso_word& w, std::size_t t );
[[nodiscard]] limit_sets compute_limit_sets( formula f, evaluator& ev, std::size_t t );

/// Least r with F = GF and G = FG, searched up to |u| + |v| (|sff(f)| + 1).
[[nodiscard]] std::size_t stability_index( formula f, const lasso_word& w );

struct master_report
{
  std::size_t stability_index = 0;
  bool holds = false;
  bool premises_satisfiable = false;
  formula_set witness_m;
  formula_set witness_n;

  [[nodiscard]] bool consistent() const noexcept { return holds == premises_satisfiable; }
};

/// Evaluates the three decomposition premises for every M of mu(f) and N of
/// nu(f) at the stability index and compares against direct evaluation.
[[nodiscard]] master_report check_master( formula f, const lasso_word& w );

} // namespace pltl
