#include <pltl/random.hpp>

#include <stdexcept>

namespace pltl
{

namespace
{

const std::vector<op> all_temporal = { op::next,      op::until,          op::weak_until,     op::release,
                                       op::strong_release, op::yesterday, op::weak_yesterday, op::since,
                                       op::weak_since, op::back,          op::weak_back };

} // namespace

std::vector<std::string> default_ap( std::size_t count )
{
  static const std::string names = "pqrstuvwxyz";
  std::vector<std::string> ap;
  for ( std::size_t i = 0; i < count; ++i )
  {
    ap.push_back( i < names.size() ? std::string( 1, names[i] ) : "a" + std::to_string( i ) );
  }
  return ap;
}

std::size_t generator::uniform( std::size_t lo, std::size_t hi )
{
  return std::uniform_int_distribution<std::size_t>( lo, hi )( _rng );
}

formula generator::build( std::size_t budget, const formula_limits& limits, const std::vector<op>& ops )
{
  const auto ap = default_ap( limits.ap_count );
  if ( budget <= 1 )
  {
    const auto name = ap[uniform( 0, ap.size() - 1 )];
    return uniform( 0, 1 ) ? prop( name ) : neg_prop( name );
  }
  // roughly one node in four is Boolean; a Boolean node splits the budget
  if ( uniform( 0, 3 ) == 0 )
  {
    const auto left = uniform( 1, budget - 1 );
    const auto a = build( left, limits, ops );
    const auto b = build( budget - left, limits, ops );
    return uniform( 0, 1 ) ? make_and( a, b ) : make_or( a, b );
  }
  std::vector<op> usable;
  for ( auto k : ops )
  {
    if ( is_unary( k ) || budget >= 3 )
    {
      usable.push_back( k );
    }
  }
  if ( usable.empty() )
  {
    const auto left = uniform( 1, budget - 1 );
    return make_and( build( left, limits, ops ), build( budget - left, limits, ops ) );
  }
  const auto k = usable[uniform( 0, usable.size() - 1 )];
  if ( is_unary( k ) )
  {
    return make_unary( k, build( budget - 1, limits, ops ) );
  }
  const auto left = uniform( 1, budget - 2 );
  // occasional constant operands give F, G, O, H and their duals
  auto lhs = build( left, limits, ops );
  auto rhs = build( budget - 1 - left, limits, ops );
  if ( uniform( 0, 5 ) == 0 )
  {
    lhs = ( k == op::until || k == op::since || k == op::strong_release || k == op::back ) ? tt() : ff();
  }
  return make_binary( k, lhs, rhs );
}

formula generator::random_formula( const formula_limits& limits )
{
  if ( limits.max_size == 0 || limits.ap_count == 0 )
  {
    throw std::invalid_argument( "formula limits admit no formula" );
  }
  const auto& ops = limits.operators.empty() ? all_temporal : limits.operators;
  for ( std::size_t attempt = 0; attempt < 100000; ++attempt )
  {
    const auto f = build( uniform( 1, limits.max_size ), limits, ops );
    if ( size( f ).total() > limits.max_size || psf( f ).size() > limits.max_psf )
    {
      continue;
    }
    if ( limits.max_mu_nu != SIZE_MAX && mu_set( f ).size() + nu_set( f ).size() > limits.max_mu_nu )
    {
      continue;
    }
    return f;
  }
  throw std::runtime_error( "no formula satisfies the limits" );
}

letter generator::random_letter( const std::vector<std::string>& ap )
{
  letter l;
  for ( const auto& p : ap )
  {
    if ( uniform( 0, 1 ) )
    {
      l.insert( p );
    }
  }
  return l;
}

lasso_word generator::random_lasso( const std::vector<std::string>& ap, const lasso_limits& limits )
{
  lasso_word w;
  const auto u = uniform( 0, limits.max_prefix );
  const auto v = uniform( 1, std::max<std::size_t>( 1, limits.max_period ) );
  for ( std::size_t i = 0; i < u; ++i )
  {
    w.prefix.push_back( random_letter( ap ) );
  }
  for ( std::size_t i = 0; i < v; ++i )
  {
    w.period.push_back( random_letter( ap ) );
  }
  return w;
}

} // namespace pltl
