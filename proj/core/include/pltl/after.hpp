#pragma once

#include <pltl/formula.hpp>
#include <pltl/letter.hpp>
#include <pltl/prop_logic.hpp>

#include <cstdint>
#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace pltl
{

/// Local after-function: reads `sigma` under the guess `c` of past
/// subformulae whose weakening conditions hold on it.
[[nodiscard]] formula af_loc( formula f, const letter& sigma, const formula_set& c );
/// Past update: f rewritten under c, conjoined with the local after-images of
/// the weakening conditions of psf(f) n c.
[[nodiscard]] formula pu_loc( formula f, const letter& sigma, const formula_set& c );

/// Left fold of `af_loc`; letter t is paired with cs[t + 1], cs[0] is unused.
/// Throws `std::invalid_argument` unless |cs| = |w| + 1.
[[nodiscard]] formula af_loc_ext( formula f, const finite_word& w, const std::vector<formula_set>& cs );

/// Global after-function, returned as a canonical positive formula.
[[nodiscard]] formula af( formula f, const letter& sigma );
[[nodiscard]] formula af_ext( formula f, const finite_word& w );

/// Cached after-functions on canonical Boolean functions of one `prop_context`.
class after_engine
{
public:
  explicit after_engine( prop_context& ctx ) : _ctx( ctx ) {}

  [[nodiscard]] prop_context& context() noexcept { return _ctx; }

  /// Disjunction over all subsets C of psf(support(z)) of the local image of z.
  /// Large arguments are split into disjuncts and independent conjuncts first;
  /// `z` must be monotone.
  [[nodiscard]] canonical_bool af( canonical_bool z, const letter& sigma );
  [[nodiscard]] canonical_bool af_ext( canonical_bool z, const finite_word& w );
  /// Local after-function with a fixed guess, applied atom-wise.
  [[nodiscard]] canonical_bool af_loc( canonical_bool z, const letter& sigma, const formula_set& c );
  /// Canonical local image of a single atom.
  [[nodiscard]] canonical_bool atom_af_loc( formula atom, const letter& sigma, const formula_set& c );

private:
  /// Pools of at most this many past subformulae are enumerated without splitting.
  static constexpr std::size_t direct_pool_limit = 8;

  std::vector<formula> past_pool( const std::vector<formula>& atoms );
  canonical_bool af_cube( const std::vector<formula>& atoms, const letter& sigma );
  canonical_bool enumerate( canonical_bool z, const std::vector<formula>& atoms, const letter& sigma );
  std::uint32_t letter_index( const letter& sigma );
  const std::vector<formula>& atom_psf( formula atom );

  prop_context& _ctx;
  std::map<letter, std::uint32_t> _letters;
  std::unordered_map<std::uint64_t, canonical_bool> _af_cache;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>, canonical_bool> _atom_cache;
  std::unordered_map<formula, std::vector<formula>> _psf_cache;
};

} // namespace pltl
