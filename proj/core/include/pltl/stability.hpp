#pragma once

#include <pltl/formula.hpp>

namespace pltl
{

/// nu-promoting rewrite: U nodes in `m` become W, M nodes in `m` become R,
/// every other U or M node becomes ff. Membership is structural identity.
[[nodiscard]] formula rewrite_M( formula f, const formula_set& m );

/// mu-promoting rewrite: W and R nodes in `n` become tt, every other W node
/// becomes U and every other R node becomes M.
[[nodiscard]] formula rewrite_N( formula f, const formula_set& n );

} // namespace pltl
