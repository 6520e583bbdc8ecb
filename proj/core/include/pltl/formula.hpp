#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

namespace pltl
{

/// Node kinds of past LTL in negation normal form.
///
/// Negation only exists on propositions (`neg_prop`). The derived operators
/// F, G, O and H are not node kinds; they are expanded on construction.
enum class op : std::uint8_t
{
  tt,
  ff,
  prop,
  neg_prop,
  and_,
  or_,
  next,
  until,
  weak_until,
  release,
  strong_release,
  yesterday,
  weak_yesterday,
  since,
  weak_since,
  back,
  weak_back
};

[[nodiscard]] bool is_unary( op k ) noexcept;
[[nodiscard]] bool is_binary( op k ) noexcept;
[[nodiscard]] bool is_past( op k ) noexcept;
[[nodiscard]] bool is_future( op k ) noexcept;
[[nodiscard]] std::string_view op_name( op k ) noexcept;

struct formula_node;

/// Handle to an interned, immutable formula.
///
/// All formulas live in a process-wide interner, so two handles are equal iff
/// the formulas are structurally equal. The interning id doubles as the
/// "first interned" total order used for deterministic enumeration.
class formula
{
public:
  formula() = default;
  explicit formula( const formula_node* node ) noexcept : _node( node ) {}

  [[nodiscard]] bool valid() const noexcept { return _node != nullptr; }

  [[nodiscard]] op kind() const noexcept;
  /// Operand of a unary node, left operand of a binary node.
  [[nodiscard]] formula lhs() const noexcept;
  [[nodiscard]] formula rhs() const noexcept;
  [[nodiscard]] const std::string& name() const noexcept;
  [[nodiscard]] std::uint32_t id() const noexcept;
  [[nodiscard]] std::size_t hash() const noexcept;

  [[nodiscard]] bool is_constant() const noexcept { return kind() == op::tt || kind() == op::ff; }
  [[nodiscard]] bool is_propositional() const noexcept { return kind() == op::prop || kind() == op::neg_prop; }
  [[nodiscard]] bool is_atomic() const noexcept { return is_constant() || is_propositional(); }
  [[nodiscard]] bool is_boolean() const noexcept { return kind() == op::and_ || kind() == op::or_; }
  [[nodiscard]] bool is_temporal() const noexcept { return !is_atomic() && !is_boolean(); }
  [[nodiscard]] bool is_past() const noexcept { return pltl::is_past( kind() ); }
  [[nodiscard]] bool is_future() const noexcept { return pltl::is_future( kind() ); }

  [[nodiscard]] const formula_node* node() const noexcept { return _node; }

  friend bool operator==( formula a, formula b ) noexcept { return a._node == b._node; }
  friend bool operator!=( formula a, formula b ) noexcept { return a._node != b._node; }
  /// Orders by interning id.
  friend bool operator<( formula a, formula b ) noexcept { return a.id() < b.id(); }

private:
  const formula_node* _node = nullptr;
};

using formula_set = std::set<formula>;

/* constructors */

[[nodiscard]] formula tt();
[[nodiscard]] formula ff();
[[nodiscard]] formula prop( std::string_view name );
[[nodiscard]] formula neg_prop( std::string_view name );
[[nodiscard]] formula make_unary( op kind, formula operand );
[[nodiscard]] formula make_binary( op kind, formula lhs, formula rhs );
/// Rebuilds `f` with new operands, keeping its kind.
[[nodiscard]] formula with_operands( formula f, formula lhs, formula rhs = {} );

[[nodiscard]] formula make_and( formula a, formula b );
[[nodiscard]] formula make_or( formula a, formula b );
[[nodiscard]] formula next( formula a );
[[nodiscard]] formula until( formula a, formula b );
[[nodiscard]] formula weak_until( formula a, formula b );
[[nodiscard]] formula release( formula a, formula b );
[[nodiscard]] formula strong_release( formula a, formula b );
[[nodiscard]] formula yesterday( formula a );
[[nodiscard]] formula weak_yesterday( formula a );
[[nodiscard]] formula since( formula a, formula b );
[[nodiscard]] formula weak_since( formula a, formula b );
[[nodiscard]] formula back( formula a, formula b );
[[nodiscard]] formula weak_back( formula a, formula b );

// F a = tt U a, G a = a W ff, O a = tt S a, H a = a wS ff
[[nodiscard]] formula eventually( formula a );
[[nodiscard]] formula globally( formula a );
[[nodiscard]] formula once( formula a );
[[nodiscard]] formula historically( formula a );

/// Negation normal form of the negation of `f`.
[[nodiscard]] formula dual_negate( formula f );

/* structural queries */

/// Propositional and temporal subformulae (constants and Boolean nodes excluded).
[[nodiscard]] formula_set sff( formula f );
/// Subformulae rooted with a past operator.
[[nodiscard]] formula_set psf( formula f );
/// Subformulae rooted with U or M.
[[nodiscard]] formula_set mu_set( formula f );
/// Subformulae rooted with W or R.
[[nodiscard]] formula_set nu_set( formula f );
[[nodiscard]] std::set<std::string> variables( formula f );

/// Future operators drawn from {X, U, M} only.
[[nodiscard]] bool in_mu_fragment( formula f );
/// Future operators drawn from {X, W, R} only.
[[nodiscard]] bool in_nu_fragment( formula f );

struct size_metrics
{
  std::uint64_t n = 0; // future and propositional nodes
  std::uint64_t m = 0; // past nodes

  [[nodiscard]] std::uint64_t total() const noexcept { return n + m; }
  friend bool operator==( const size_metrics&, const size_metrics& ) = default;
};

/// Node counts on the syntax tree (shared subtrees counted once per occurrence).
[[nodiscard]] size_metrics size( formula f );

/// Number of distinct interned formulas so far.
[[nodiscard]] std::size_t interned_count();

/// Re-parseable rendering; tt U a, a W ff, tt S a and a wS ff print as F, G, O, H.
[[nodiscard]] std::string to_string( formula f );
std::ostream& operator<<( std::ostream& os, formula f );

} // namespace pltl

template<>
struct std::hash<pltl::formula>
{
  std::size_t operator()( pltl::formula f ) const noexcept { return f.hash(); }
};
