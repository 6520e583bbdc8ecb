#pragma once

#include <pltl/formula.hpp>

#include <cstddef>
#include <vector>

namespace pltl
{

/// Root-level swap Y -> wY, S -> wS, B -> wB; identity elsewhere.
[[nodiscard]] formula weaken( formula f );
/// Root-level swap wY -> Y, wS -> S, wB -> B; identity elsewhere.
[[nodiscard]] formula strengthen( formula f );
[[nodiscard]] bool is_weak( formula f );

/// Weakens every past node of `f` that belongs to `c` and strengthens the rest.
/// Membership is decided on the node of `f` before its operands are rewritten.
[[nodiscard]] formula rewrite_under( formula f, const formula_set& c );
/// `{ s rewritten under c | s in set }`
[[nodiscard]] formula_set rewrite_set( const formula_set& set, const formula_set& c );

/// Weakening condition of a past-rooted formula.
/// Throws `std::invalid_argument` for other roots.
[[nodiscard]] formula wc( formula f );

/// All subsets of psf(f): the already-weak subset first, then by cardinality
/// and lexicographically on interning ids.
[[nodiscard]] std::vector<formula_set> enumerate_past_sets( formula f );

/// Whether `c_i` is saturated with respect to `c_j` over psf(f).
[[nodiscard]] bool is_saturated( const formula_set& c_j, const formula_set& c_i, formula f );

/// The single set C with f rewritten under C equal to the sequential rewrite by `cs`.
/// Throws `std::invalid_argument` when `cs` is empty.
[[nodiscard]] formula_set compose_sequence( formula f, const std::vector<formula_set>& cs );

/// Indices j (0-based into `sets`) with sets[j] saturated-below sets[i].
[[nodiscard]] std::vector<std::size_t> rewrite_indices_for( formula f, const std::vector<formula_set>& sets,
                                                            std::size_t i );

} // namespace pltl
