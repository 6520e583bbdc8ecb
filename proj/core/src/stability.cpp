#include <pltl/stability.hpp>

#include <unordered_map>

namespace pltl
{

namespace
{

template<typename Root>
formula rewrite_rec( formula f, std::unordered_map<formula, formula>& memo, Root&& root )
{
  if ( f.is_atomic() )
  {
    return f;
  }
  if ( auto it = memo.find( f ); it != memo.end() )
  {
    return it->second;
  }
  const auto l = rewrite_rec( f.lhs(), memo, root );
  const auto r = is_binary( f.kind() ) ? rewrite_rec( f.rhs(), memo, root ) : formula{};
  const auto g = root( f, l, r );
  memo.emplace( f, g );
  return g;
}

} // namespace

formula rewrite_M( formula f, const formula_set& m )
{
  std::unordered_map<formula, formula> memo;
  return rewrite_rec( f, memo, [&]( formula node, formula l, formula r ) {
    switch ( node.kind() )
    {
    case op::until: return m.count( node ) ? weak_until( l, r ) : ff();
    case op::strong_release: return m.count( node ) ? release( l, r ) : ff();
    default: return with_operands( node, l, r );
    }
  } );
}

formula rewrite_N( formula f, const formula_set& n )
{
  std::unordered_map<formula, formula> memo;
  return rewrite_rec( f, memo, [&]( formula node, formula l, formula r ) {
    switch ( node.kind() )
    {
    case op::weak_until: return n.count( node ) ? tt() : until( l, r );
    case op::release: return n.count( node ) ? tt() : strong_release( l, r );
    default: return with_operands( node, l, r );
    }
  } );
}

} // namespace pltl
