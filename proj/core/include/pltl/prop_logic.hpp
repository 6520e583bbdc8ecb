#pragma once

#include <pltl/formula.hpp>

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace pltl
{

/// Handle to a Boolean function over formula atoms inside one `prop_context`.
///
/// Handles are canonical: two handles of the same context are equal iff they
/// denote the same function under propositional semantics.
struct canonical_bool
{
  std::uint32_t id = 0;

  friend bool operator==( canonical_bool, canonical_bool ) = default;
  friend auto operator<=>( canonical_bool, canonical_bool ) = default;
};

/// Reduced ordered BDD manager whose variables are non-Boolean formulas.
///
/// Variables are ordered by interning id. A context is single-threaded;
/// independent contexts may be used concurrently.
class prop_context
{
public:
  prop_context();

  [[nodiscard]] canonical_bool top() const noexcept { return { 1 }; }
  [[nodiscard]] canonical_bool bottom() const noexcept { return { 0 }; }

  [[nodiscard]] bool is_true( canonical_bool a ) const noexcept { return a.id == 1; }
  [[nodiscard]] bool is_false( canonical_bool a ) const noexcept { return a.id == 0; }

  /// Function of a single atom; `atom` must not be constant or Boolean-rooted.
  [[nodiscard]] canonical_bool atom( formula atom );
  [[nodiscard]] canonical_bool canonicalize( formula f );

  [[nodiscard]] canonical_bool conj( canonical_bool a, canonical_bool b );
  [[nodiscard]] canonical_bool disj( canonical_bool a, canonical_bool b );
  [[nodiscard]] canonical_bool ite( canonical_bool c, canonical_bool t, canonical_bool e );

  [[nodiscard]] bool prop_equiv( formula a, formula b );

  /// Substitutes `f(x)` for every atom `x` (Shannon composition).
  [[nodiscard]] canonical_bool map_atoms( canonical_bool a, const std::function<canonical_bool( formula )>& f );

  /// Positive formula for a monotone function: `(x & hi) | lo` per decision node.
  [[nodiscard]] formula to_formula( canonical_bool a );

  /// Atoms the function depends on, in variable order.
  [[nodiscard]] std::vector<formula> support( canonical_bool a );

  [[nodiscard]] bool evaluate( canonical_bool a, const std::function<bool( formula )>& assignment ) const;

  [[nodiscard]] std::size_t node_count() const noexcept { return _nodes.size(); }

  /// Top decision of a non-constant function: a = ite(var, hi, lo).
  struct decision
  {
    formula var;
    canonical_bool lo;
    canonical_bool hi;
  };
  /// Throws `std::invalid_argument` for the constants.
  [[nodiscard]] decision decompose( canonical_bool a ) const;

private:
  struct node
  {
    std::uint32_t var; // interning id of the atom; UINT32_MAX for terminals
    std::uint32_t lo;
    std::uint32_t hi;
  };

  std::uint32_t make_node( std::uint32_t var, std::uint32_t lo, std::uint32_t hi );
  std::uint32_t apply_and( std::uint32_t a, std::uint32_t b );
  std::uint32_t apply_or( std::uint32_t a, std::uint32_t b );
  std::uint32_t apply_ite( std::uint32_t c, std::uint32_t t, std::uint32_t e );
  std::uint32_t cofactor( std::uint32_t a, std::uint32_t var, bool value ) const;

  struct triple
  {
    std::uint32_t a, b, c;
    friend bool operator==( const triple&, const triple& ) = default;
  };
  struct triple_hash
  {
    std::size_t operator()( const triple& t ) const noexcept
    {
      std::uint64_t h = t.a;
      h = h * 0x100000001b3ULL ^ t.b;
      h = h * 0x100000001b3ULL ^ t.c;
      return static_cast<std::size_t>( h ^ ( h >> 29 ) );
    }
  };

  std::vector<node> _nodes;
  std::unordered_map<triple, std::uint32_t, triple_hash> _unique;
  std::unordered_map<triple, std::uint32_t, triple_hash> _ite_cache;
  std::unordered_map<std::uint64_t, std::uint32_t> _and_cache;
  std::unordered_map<std::uint64_t, std::uint32_t> _or_cache;
  std::unordered_map<std::uint32_t, formula> _atoms;
  std::unordered_map<std::uint32_t, formula> _formula_cache;
  std::unordered_map<formula, std::uint32_t> _canon_cache;
};

} // namespace pltl
