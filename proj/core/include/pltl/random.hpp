#pragma once

#include <pltl/formula.hpp>
#include <pltl/lasso.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace pltl
{

struct formula_limits
{
  std::size_t max_size = 6;  // n + m
  std::size_t max_psf = 2;
  std::size_t ap_count = 3;
  /// Temporal operators to draw from; empty means all of them.
  std::vector<op> operators;
  /// Upper bound on |mu(f)| + |nu(f)|.
  std::size_t max_mu_nu = SIZE_MAX;
};

struct lasso_limits
{
  std::size_t max_prefix = 4;
  std::size_t max_period = 4;
};

/// Proposition names p, q, r, s, ... for the first `count` letters.
[[nodiscard]] std::vector<std::string> default_ap( std::size_t count );

/// Seeded generator of formulas and lasso words; equal seeds give equal streams.
class generator
{
public:
  explicit generator( std::uint64_t seed ) : _rng( seed ) {}

  /// Rejection-samples a formula within `limits`.
  [[nodiscard]] formula random_formula( const formula_limits& limits );
  [[nodiscard]] letter random_letter( const std::vector<std::string>& ap );
  [[nodiscard]] lasso_word random_lasso( const std::vector<std::string>& ap, const lasso_limits& limits = {} );
  [[nodiscard]] std::size_t uniform( std::size_t lo, std::size_t hi );

  [[nodiscard]] std::mt19937_64& engine() noexcept { return _rng; }

private:
  formula build( std::size_t budget, const formula_limits& limits, const std::vector<op>& ops );

  std::mt19937_64 _rng;
};

} // namespace pltl
