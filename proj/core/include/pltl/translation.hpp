#pragma once

#include <pltl/after.hpp>
#include <pltl/automaton.hpp>
#include <pltl/formula.hpp>
#include <pltl/prop_logic.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace pltl
{

/// State of the weakening-conditions bed: one Boolean function per past set C_i.
using wc_state = std::vector<canonical_bool>;

/// Shared data for translating one formula: the ordered past sets C_1..C_k,
/// their rewrite indices J_i, a propositional context and the explicit bed H.
///
/// A context is single-threaded.
class translation_context
{
public:
  /// `ap` defaults to the variables of `phi`; extra names are allowed.
  /// Throws `std::invalid_argument` if `ap` misses a variable of `phi`.
  explicit translation_context( formula phi, std::vector<std::string> ap = {} );
  ~translation_context();

  translation_context( const translation_context& ) = delete;
  translation_context& operator=( const translation_context& ) = delete;

  [[nodiscard]] formula phi() const noexcept { return _phi; }
  [[nodiscard]] const std::vector<std::string>& ap() const noexcept { return _ap; }
  [[nodiscard]] const std::vector<formula_set>& past_sets() const noexcept { return _sets; }
  [[nodiscard]] const std::vector<std::size_t>& rewrite_indices( std::size_t i ) const { return _j.at( i ); }
  [[nodiscard]] prop_context& props() noexcept { return _props; }
  [[nodiscard]] after_engine& engine() noexcept { return _engine; }

  /// <tt, ff, ..., ff>
  [[nodiscard]] wc_state initial_tuple();
  /// Rewrite-condition update of every component.
  [[nodiscard]] wc_state rc( const wc_state& tuple, const letter& sigma );

  /// Reachable part of H under `rc`, built on first use.
  /// Throws `resource_limit_error` beyond `max_states`.
  const omega_automaton& wc_automaton( std::size_t max_states = 200000 );
  /// Tuple of bed state `s`; requires `wc_automaton` to have been built.
  [[nodiscard]] const wc_state& bed_tuple( std::uint32_t s ) const { return _bed_tuples.at( s ); }

  /// Buchi runner checking that F(psi[N]_mu) recurs, for psi in mu(phi).
  [[nodiscard]] std::unique_ptr<runner> make_b2( formula psi, const formula_set& n );
  /// co-Buchi runner checking that G(psi[M]_nu) eventually holds, for psi in nu(phi).
  [[nodiscard]] std::unique_ptr<runner> make_c3( formula psi, const formula_set& m );
  /// co-Buchi runner guessing a stability point and checking phi[M]_nu from there.
  [[nodiscard]] std::unique_ptr<runner> make_c1( const formula_set& m );

  /// One-pair Rabin automaton for the branch (M, N).
  [[nodiscard]] omega_automaton build_rabin_component( const formula_set& m, const formula_set& n,
                                                       std::size_t max_states = 200000 );

  [[nodiscard]] std::uint32_t letter_mask( const letter& sigma ) const { return encode_letter( _ap, sigma ); }
  [[nodiscard]] const letter& letter_of( std::uint32_t mask ) const { return _letters.at( mask ); }

private:
  canonical_bool wc_image( std::size_t i, std::size_t j, const letter& sigma );

  formula _phi;
  std::vector<std::string> _ap;
  std::vector<letter> _letters;
  std::vector<formula_set> _sets;
  std::vector<std::vector<std::size_t>> _j;
  std::vector<std::vector<formula_set>> _rewritten;      // [i][jj]: C_i rewritten under C_{J_i[jj]}
  std::vector<std::vector<canonical_bool>> _wc_conj;     // [i][jj]: conjunction of wc(xi under C_j), xi in C_i
  std::map<std::tuple<std::size_t, std::size_t, std::uint32_t>, canonical_bool> _wc_image_cache;
  prop_context _props;
  after_engine _engine;
  std::unique_ptr<omega_automaton> _bed;
  std::vector<wc_state> _bed_tuples;
};

struct translation_stats
{
  std::size_t states = 0;
  std::size_t pairs = 0;
  std::size_t branches = 0;
  std::size_t bed_states = 0;
  std::size_t past_sets = 0;   // k
  std::size_t mu = 0;          // |mu(phi)|
  std::size_t nu = 0;          // |nu(phi)|
  size_metrics size;
};

struct translation_result
{
  omega_automaton automaton;
  translation_stats stats;
};

/// Deterministic Rabin automaton for `phi`: the union over M in 2^mu(phi),
/// N in 2^nu(phi) of the branch automata. Throws `resource_limit_error` when
/// any intermediate automaton exceeds `max_states`.
[[nodiscard]] translation_result translate( formula phi, std::vector<std::string> ap = {},
                                            std::size_t max_states = 200000 );

/// All subsets of `s`, smallest first.
[[nodiscard]] std::vector<formula_set> subsets( const formula_set& s );

} // namespace pltl
