#include <pltl/prop_logic.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pltl
{

namespace
{
constexpr std::uint32_t terminal_var = std::numeric_limits<std::uint32_t>::max();

std::uint64_t pair_key( std::uint32_t a, std::uint32_t b )
{
  if ( a > b )
  {
    std::swap( a, b );
  }
  return ( static_cast<std::uint64_t>( a ) << 32 ) | b;
}
} // namespace

prop_context::prop_context()
{
  _nodes.push_back( { terminal_var, 0, 0 } );
  _nodes.push_back( { terminal_var, 1, 1 } );
}

std::uint32_t prop_context::make_node( std::uint32_t var, std::uint32_t lo, std::uint32_t hi )
{
  if ( lo == hi )
  {
    return lo;
  }
  const triple key{ var, lo, hi };
  if ( auto it = _unique.find( key ); it != _unique.end() )
  {
    return it->second;
  }
  const auto id = static_cast<std::uint32_t>( _nodes.size() );
  _nodes.push_back( { var, lo, hi } );
  _unique.emplace( key, id );
  return id;
}

std::uint32_t prop_context::cofactor( std::uint32_t a, std::uint32_t var, bool value ) const
{
  const auto& n = _nodes[a];
  if ( n.var != var )
  {
    return a;
  }
  return value ? n.hi : n.lo;
}

std::uint32_t prop_context::apply_and( std::uint32_t a, std::uint32_t b )
{
  if ( a == 0 || b == 0 ) return 0;
  if ( a == 1 ) return b;
  if ( b == 1 || a == b ) return a;
  const auto key = pair_key( a, b );
  if ( auto it = _and_cache.find( key ); it != _and_cache.end() )
  {
    return it->second;
  }
  const auto var = std::min( _nodes[a].var, _nodes[b].var );
  const auto lo = apply_and( cofactor( a, var, false ), cofactor( b, var, false ) );
  const auto hi = apply_and( cofactor( a, var, true ), cofactor( b, var, true ) );
  const auto r = make_node( var, lo, hi );
  _and_cache.emplace( key, r );
  return r;
}

std::uint32_t prop_context::apply_or( std::uint32_t a, std::uint32_t b )
{
  if ( a == 1 || b == 1 ) return 1;
  if ( a == 0 ) return b;
  if ( b == 0 || a == b ) return a;
  const auto key = pair_key( a, b );
  if ( auto it = _or_cache.find( key ); it != _or_cache.end() )
  {
    return it->second;
  }
  const auto var = std::min( _nodes[a].var, _nodes[b].var );
  const auto lo = apply_or( cofactor( a, var, false ), cofactor( b, var, false ) );
  const auto hi = apply_or( cofactor( a, var, true ), cofactor( b, var, true ) );
  const auto r = make_node( var, lo, hi );
  _or_cache.emplace( key, r );
  return r;
}

std::uint32_t prop_context::apply_ite( std::uint32_t c, std::uint32_t t, std::uint32_t e )
{
  if ( c == 1 ) return t;
  if ( c == 0 ) return e;
  if ( t == e ) return t;
  if ( t == 1 && e == 0 ) return c;
  if ( t == 1 ) return apply_or( c, e );
  if ( e == 0 ) return apply_and( c, t );
  const triple key{ c, t, e };
  if ( auto it = _ite_cache.find( key ); it != _ite_cache.end() )
  {
    return it->second;
  }
  const auto var = std::min( { _nodes[c].var, _nodes[t].var, _nodes[e].var } );
  const auto lo = apply_ite( cofactor( c, var, false ), cofactor( t, var, false ), cofactor( e, var, false ) );
  const auto hi = apply_ite( cofactor( c, var, true ), cofactor( t, var, true ), cofactor( e, var, true ) );
  const auto r = make_node( var, lo, hi );
  _ite_cache.emplace( key, r );
  return r;
}

canonical_bool prop_context::atom( formula a )
{
  if ( !a.valid() || a.is_constant() || a.is_boolean() )
  {
    throw std::invalid_argument( "BDD atoms must be propositional or temporal formulas" );
  }
  _atoms.emplace( a.id(), a );
  return { make_node( a.id(), 0, 1 ) };
}

prop_context::decision prop_context::decompose( canonical_bool a ) const
{
  if ( a.id <= 1 )
  {
    throw std::invalid_argument( "constant function has no decision" );
  }
  const auto& n = _nodes[a.id];
  return { _atoms.at( n.var ), { n.lo }, { n.hi } };
}

canonical_bool prop_context::canonicalize( formula f )
{
  switch ( f.kind() )
  {
  case op::tt: return top();
  case op::ff: return bottom();
  case op::and_:
  case op::or_:
  {
    if ( auto it = _canon_cache.find( f ); it != _canon_cache.end() )
    {
      return { it->second };
    }
    const auto l = canonicalize( f.lhs() );
    const auto r = canonicalize( f.rhs() );
    const auto res = f.kind() == op::and_ ? conj( l, r ) : disj( l, r );
    _canon_cache.emplace( f, res.id );
    return res;
  }
  default: return atom( f );
  }
}

canonical_bool prop_context::conj( canonical_bool a, canonical_bool b ) { return { apply_and( a.id, b.id ) }; }
canonical_bool prop_context::disj( canonical_bool a, canonical_bool b ) { return { apply_or( a.id, b.id ) }; }
canonical_bool prop_context::ite( canonical_bool c, canonical_bool t, canonical_bool e )
{
  return { apply_ite( c.id, t.id, e.id ) };
}

bool prop_context::prop_equiv( formula a, formula b ) { return canonicalize( a ) == canonicalize( b ); }

canonical_bool prop_context::map_atoms( canonical_bool a, const std::function<canonical_bool( formula )>& f )
{
  std::unordered_map<std::uint32_t, std::uint32_t> memo;
  std::function<std::uint32_t( std::uint32_t )> rec = [&]( std::uint32_t n ) -> std::uint32_t {
    if ( n <= 1 )
    {
      return n;
    }
    if ( auto it = memo.find( n ); it != memo.end() )
    {
      return it->second;
    }
    const auto nd = _nodes[n];
    const auto image = f( _atoms.at( nd.var ) ).id;
    const auto hi = rec( nd.hi );
    const auto lo = rec( nd.lo );
    const auto r = apply_ite( image, hi, lo );
    memo.emplace( n, r );
    return r;
  };
  return { rec( a.id ) };
}

formula prop_context::to_formula( canonical_bool a )
{
  if ( a.id == 0 ) return ff();
  if ( a.id == 1 ) return tt();
  if ( auto it = _formula_cache.find( a.id ); it != _formula_cache.end() )
  {
    return it->second;
  }
  const auto nd = _nodes[a.id];
  const auto x = _atoms.at( nd.var );
  const auto hi = to_formula( { nd.hi } );
  const auto lo = to_formula( { nd.lo } );
  formula term = hi.kind() == op::tt ? x : make_and( x, hi );
  formula r = lo.kind() == op::ff ? term : make_or( term, lo );
  _formula_cache.emplace( a.id, r );
  return r;
}

std::vector<formula> prop_context::support( canonical_bool a )
{
  std::vector<std::uint32_t> vars;
  std::vector<std::uint32_t> stack{ a.id };
  std::unordered_map<std::uint32_t, bool> seen;
  while ( !stack.empty() )
  {
    const auto n = stack.back();
    stack.pop_back();
    if ( n <= 1 || !seen.emplace( n, true ).second )
    {
      continue;
    }
    vars.push_back( _nodes[n].var );
    stack.push_back( _nodes[n].lo );
    stack.push_back( _nodes[n].hi );
  }
  std::sort( vars.begin(), vars.end() );
  vars.erase( std::unique( vars.begin(), vars.end() ), vars.end() );
  std::vector<formula> out;
  out.reserve( vars.size() );
  for ( auto v : vars )
  {
    out.push_back( _atoms.at( v ) );
  }
  return out;
}

bool prop_context::evaluate( canonical_bool a, const std::function<bool( formula )>& assignment ) const
{
  auto n = a.id;
  while ( n > 1 )
  {
    const auto& nd = _nodes[n];
    n = assignment( _atoms.at( nd.var ) ) ? nd.hi : nd.lo;
  }
  return n == 1;
}

} // namespace pltl
