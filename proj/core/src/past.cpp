#include <pltl/past.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pltl
{

formula weaken( formula f )
{
  switch ( f.kind() )
  {
  case op::yesterday: return weak_yesterday( f.lhs() );
  case op::since: return weak_since( f.lhs(), f.rhs() );
  case op::back: return weak_back( f.lhs(), f.rhs() );
  default: return f;
  }
}

formula strengthen( formula f )
{
  switch ( f.kind() )
  {
  case op::weak_yesterday: return yesterday( f.lhs() );
  case op::weak_since: return since( f.lhs(), f.rhs() );
  case op::weak_back: return back( f.lhs(), f.rhs() );
  default: return f;
  }
}

bool is_weak( formula f ) { return weaken( f ) == f; }

namespace
{

formula rewrite_rec( formula f, const formula_set& c, std::unordered_map<formula, formula>& memo )
{
  if ( f.is_atomic() )
  {
    return f;
  }
  if ( auto it = memo.find( f ); it != memo.end() )
  {
    return it->second;
  }
  const auto l = rewrite_rec( f.lhs(), c, memo );
  const auto r = is_binary( f.kind() ) ? rewrite_rec( f.rhs(), c, memo ) : formula{};
  auto g = with_operands( f, l, r );
  if ( f.is_temporal() )
  {
    g = c.count( f ) ? weaken( g ) : strengthen( g );
  }
  memo.emplace( f, g );
  return g;
}

} // namespace

formula rewrite_under( formula f, const formula_set& c )
{
  std::unordered_map<formula, formula> memo;
  return rewrite_rec( f, c, memo );
}

formula_set rewrite_set( const formula_set& set, const formula_set& c )
{
  std::unordered_map<formula, formula> memo;
  formula_set out;
  for ( auto s : set )
  {
    out.insert( rewrite_rec( s, c, memo ) );
  }
  return out;
}

formula wc( formula f )
{
  switch ( f.kind() )
  {
  case op::yesterday:
  case op::weak_yesterday: return f.lhs();
  case op::since: return f.rhs();
  case op::weak_since: return make_or( f.lhs(), f.rhs() );
  case op::back: return make_and( f.lhs(), f.rhs() );
  case op::weak_back: return f.rhs();
  default: throw std::invalid_argument( "weakening condition of a non-past formula: " + to_string( f ) );
  }
}

std::vector<formula_set> enumerate_past_sets( formula f )
{
  const auto ps = psf( f );
  const std::vector<formula> members( ps.begin(), ps.end() );
  if ( members.size() > 20 )
  {
    throw std::length_error( "too many past subformulae to enumerate" );
  }
  std::vector<std::vector<std::size_t>> subsets;
  const std::size_t count = std::size_t{ 1 } << members.size();
  subsets.reserve( count );
  for ( std::size_t mask = 0; mask < count; ++mask )
  {
    std::vector<std::size_t> idx;
    for ( std::size_t b = 0; b < members.size(); ++b )
    {
      if ( mask & ( std::size_t{ 1 } << b ) )
      {
        idx.push_back( b );
      }
    }
    subsets.push_back( std::move( idx ) );
  }
  std::sort( subsets.begin(), subsets.end(), []( const auto& a, const auto& b ) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  } );

  formula_set weak;
  for ( auto m : members )
  {
    if ( is_weak( m ) )
    {
      weak.insert( m );
    }
  }
  std::vector<formula_set> out{ weak };
  for ( const auto& idx : subsets )
  {
    formula_set s;
    for ( auto b : idx )
    {
      s.insert( members[b] );
    }
    if ( s != weak )
    {
      out.push_back( std::move( s ) );
    }
  }
  return out;
}

bool is_saturated( const formula_set& c_j, const formula_set& c_i, formula f )
{
  const auto ps = psf( f );
  const std::vector<formula> members( ps.begin(), ps.end() );
  std::vector<formula> under_j, under_i;
  for ( auto x : members )
  {
    under_j.push_back( rewrite_under( x, c_j ) );
    under_i.push_back( rewrite_under( x, c_i ) );
  }
  for ( std::size_t a = 0; a < members.size(); ++a )
  {
    for ( std::size_t b = a + 1; b < members.size(); ++b )
    {
      if ( under_j[a] == under_j[b] && under_i[a] != under_i[b] )
      {
        return false;
      }
    }
  }
  return true;
}

formula_set compose_sequence( formula f, const std::vector<formula_set>& cs )
{
  if ( cs.empty() )
  {
    throw std::invalid_argument( "compose_sequence needs at least one set" );
  }
  formula_set out;
  for ( auto x : psf( f ) )
  {
    auto y = x;
    for ( const auto& c : cs )
    {
      y = rewrite_under( y, c );
    }
    if ( is_weak( y ) )
    {
      out.insert( x );
    }
  }
  return out;
}

std::vector<std::size_t> rewrite_indices_for( formula f, const std::vector<formula_set>& sets, std::size_t i )
{
  std::vector<std::size_t> out;
  for ( std::size_t j = 0; j < sets.size(); ++j )
  {
    if ( is_saturated( sets[j], sets[i], f ) )
    {
      out.push_back( j );
    }
  }
  return out;
}

} // namespace pltl
