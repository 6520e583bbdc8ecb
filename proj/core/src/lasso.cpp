#include <pltl/after.hpp>
#include <pltl/lasso.hpp>
#include <pltl/past.hpp>
#include <pltl/stability.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>

namespace pltl
{

/* lasso words */

const letter& lasso_word::at( std::size_t t ) const
{
  if ( t < prefix.size() )
  {
    return prefix[t];
  }
  return period[( t - prefix.size() ) % period.size()];
}

std::size_t lasso_word::phase( std::size_t t ) const noexcept
{
  if ( t < prefix.size() )
  {
    return t;
  }
  return prefix.size() + ( t - prefix.size() ) % period.size();
}

finite_word lasso_word::slice( std::size_t from, std::size_t to ) const
{
  finite_word out;
  for ( auto t = from; t < to; ++t )
  {
    out.push_back( at( t ) );
  }
  return out;
}

namespace
{

void skip_space( std::string_view s, std::size_t& i )
{
  while ( i < s.size() && std::isspace( static_cast<unsigned char>( s[i] ) ) )
  {
    ++i;
  }
}

finite_word parse_letters( std::string_view s, std::size_t offset )
{
  finite_word out;
  std::size_t i = 0;
  skip_space( s, i );
  while ( i < s.size() )
  {
    if ( s[i] != '{' )
    {
      throw std::invalid_argument( "expected '{' at position " + std::to_string( offset + i ) );
    }
    ++i;
    letter l;
    while ( true )
    {
      skip_space( s, i );
      if ( i >= s.size() )
      {
        throw std::invalid_argument( "unterminated letter" );
      }
      if ( s[i] == '}' )
      {
        ++i;
        break;
      }
      const auto start = i;
      while ( i < s.size() && ( std::isalnum( static_cast<unsigned char>( s[i] ) ) || s[i] == '_' ) )
      {
        ++i;
      }
      if ( i == start )
      {
        throw std::invalid_argument( "expected proposition at position " + std::to_string( offset + i ) );
      }
      l.insert( std::string( s.substr( start, i - start ) ) );
      skip_space( s, i );
      if ( i < s.size() && s[i] == ',' )
      {
        ++i;
      }
    }
    out.push_back( std::move( l ) );
    skip_space( s, i );
    if ( i < s.size() && s[i] == ',' )
    {
      ++i;
      skip_space( s, i );
    }
  }
  return out;
}

std::string join( const finite_word& w )
{
  std::string out;
  for ( std::size_t i = 0; i < w.size(); ++i )
  {
    if ( i )
    {
      out += ',';
    }
    out += to_string( w[i] );
  }
  return out;
}

} // namespace

lasso_word parse_lasso( std::string_view text )
{
  const auto semi = text.find( ';' );
  if ( semi == std::string_view::npos )
  {
    throw std::invalid_argument( "lasso word needs 'prefix ; period'" );
  }
  lasso_word w{ parse_letters( text.substr( 0, semi ), 0 ), parse_letters( text.substr( semi + 1 ), semi + 1 ) };
  if ( w.period.empty() )
  {
    throw std::invalid_argument( "lasso period must not be empty" );
  }
  return w;
}

std::string to_string( const lasso_word& w ) { return join( w.prefix ) + " ; " + join( w.period ); }

lasso_word suffix( const lasso_word& w, std::size_t t )
{
  if ( t < w.prefix.size() )
  {
    return { finite_word( w.prefix.begin() + static_cast<std::ptrdiff_t>( t ), w.prefix.end() ), w.period };
  }
  const auto shift = ( t - w.prefix.size() ) % w.period.size();
  finite_word v( w.period.begin() + static_cast<std::ptrdiff_t>( shift ), w.period.end() );
  v.insert( v.end(), w.period.begin(), w.period.begin() + static_cast<std::ptrdiff_t>( shift ) );
  return { {}, std::move( v ) };
}

/* periodic bit sequences */

bool periodic_bits::value( std::size_t t ) const
{
  if ( t < threshold )
  {
    return bits[t];
  }
  return bits[threshold + ( t - threshold ) % period];
}

periodic_bits periodic_bits::canonical() const
{
  std::size_t p = period;
  for ( std::size_t d = 1; d < period; ++d )
  {
    if ( period % d )
    {
      continue;
    }
    bool ok = true;
    for ( std::size_t i = d; i < period && ok; ++i )
    {
      ok = bits[threshold + i] == bits[threshold + i - d];
    }
    if ( ok )
    {
      p = d;
      break;
    }
  }
  std::size_t t = threshold;
  while ( t > 0 && value( t - 1 ) == value( t - 1 + p ) )
  {
    --t;
  }
  periodic_bits out{ t, p, {} };
  for ( std::size_t i = 0; i < t + p; ++i )
  {
    out.bits.push_back( value( i ) );
  }
  return out;
}

/* evaluation */

evaluator::evaluator( lasso_word w ) : _word( std::move( w ) )
{
  if ( _word.period.empty() )
  {
    throw std::invalid_argument( "lasso period must not be empty" );
  }
}

const periodic_bits& evaluator::eval( formula f )
{
  if ( auto it = _cache.find( f ); it != _cache.end() )
  {
    return it->second;
  }
  auto bits = compute( f );
  return _cache.emplace( f, std::move( bits ) ).first->second;
}

periodic_bits evaluator::compute( formula f )
{
  const std::size_t p = _word.period.size();
  auto tabulate = [p]( std::size_t threshold, auto&& fn ) {
    periodic_bits out{ threshold, p, {} };
    out.bits.reserve( threshold + p );
    for ( std::size_t t = 0; t < threshold + p; ++t )
    {
      out.bits.push_back( fn( t ) );
    }
    return out;
  };

  switch ( f.kind() )
  {
  case op::tt:
  case op::ff:
  {
    const bool v = f.kind() == op::tt;
    return tabulate( 0, [v]( std::size_t ) { return v; } );
  }
  case op::prop:
  case op::neg_prop:
  {
    const bool positive = f.kind() == op::prop;
    return tabulate( _word.prefix.size(),
                     [&]( std::size_t t ) { return ( _word.at( t ).count( f.name() ) > 0 ) == positive; } );
  }
  default: break;
  }

  const auto a = eval( f.lhs() );
  if ( is_unary( f.kind() ) )
  {
    switch ( f.kind() )
    {
    case op::next:
      return tabulate( a.threshold > 0 ? a.threshold - 1 : 0, [&]( std::size_t t ) { return a.value( t + 1 ); } );
    case op::yesterday:
      return tabulate( a.threshold + 1, [&]( std::size_t t ) { return t > 0 && a.value( t - 1 ); } );
    default:
      return tabulate( a.threshold + 1, [&]( std::size_t t ) { return t == 0 || a.value( t - 1 ); } );
    }
  }

  const auto b = eval( f.rhs() );
  switch ( f.kind() )
  {
  case op::and_:
    return tabulate( std::max( a.threshold, b.threshold ), [&]( std::size_t t ) { return a.value( t ) && b.value( t ); } );
  case op::or_:
    return tabulate( std::max( a.threshold, b.threshold ), [&]( std::size_t t ) { return a.value( t ) || b.value( t ); } );
  default: break;
  }

  if ( f.is_past() )
  {
    // The one-bit recurrence is monotone in its previous value, so it is
    // periodic one period after all operands are.
    const std::size_t base = std::max( { a.threshold, b.threshold, std::size_t{ 1 } } );
    const auto kind = f.kind();
    std::vector<bool> s( base + 2 * p );
    for ( std::size_t t = 0; t < s.size(); ++t )
    {
      const bool av = a.value( t ), bv = b.value( t );
      const bool prev = t > 0 && s[t - 1];
      switch ( kind )
      {
      case op::since: s[t] = bv || ( t > 0 && av && prev ); break;
      case op::weak_since: s[t] = bv || ( av && ( t == 0 || prev ) ); break;
      case op::back: s[t] = bv && ( av || ( t > 0 && prev ) ); break;
      default: s[t] = bv && ( av || t == 0 || prev ); break;
      }
    }
    return periodic_bits{ base + p, p, std::move( s ) };
  }

  // Future binary operators: solve on the cycle, then propagate backwards.
  const std::size_t base = std::max( a.threshold, b.threshold );
  const bool least = f.kind() == op::until || f.kind() == op::strong_release;
  const bool until_like = f.kind() == op::until || f.kind() == op::weak_until;
  auto step = [&]( std::size_t t, bool next_value ) {
    const bool av = a.value( t ), bv = b.value( t );
    return until_like ? ( bv || ( av && next_value ) ) : ( bv && ( av || next_value ) );
  };
  std::vector<bool> cycle( p, !least );
  for ( int pass = 0; pass < 2; ++pass )
  {
    for ( std::size_t i = p; i-- > 0; )
    {
      const bool next_value = i + 1 == p ? cycle[0] : cycle[i + 1];
      cycle[i] = step( base + i, next_value );
    }
  }
  std::vector<bool> s( base + p );
  for ( std::size_t i = 0; i < p; ++i )
  {
    s[base + i] = cycle[i];
  }
  for ( std::size_t t = base; t-- > 0; )
  {
    s[t] = step( t, s[t + 1] );
  }
  return periodic_bits{ base, p, std::move( s ) };
}

periodic_bits eval( formula f, const lasso_word& w ) { return evaluator( w ).eval( f ).canonical(); }

bool holds( formula f, const lasso_word& w, std::size_t t ) { return evaluator( w ).holds( f, t ); }

/* entailment */

namespace
{

/// Evaluators for the suffixes w_t, shared by all t with the same phase.
class suffix_oracle
{
public:
  explicit suffix_oracle( const lasso_word& w ) : _word( w ) {}

  bool holds_on_suffix( formula f, std::size_t t )
  {
    const auto ph = _word.phase( t );
    auto it = _evaluators.find( ph );
    if ( it == _evaluators.end() )
    {
      it = _evaluators.emplace( ph, std::make_unique<evaluator>( suffix( _word, t ) ) ).first;
    }
    return it->second->holds( f, 0 );
  }

private:
  const lasso_word& _word;
  std::map<std::size_t, std::unique_ptr<evaluator>> _evaluators;
};

} // namespace

entailment_trace::entailment_trace( formula f, const lasso_word& w )
{
  suffix_oracle oracle( w );
  const auto ps = psf( f );

  formula_set c0;
  for ( auto x : ps )
  {
    if ( is_weak( x ) )
    {
      c0.insert( x );
    }
  }
  _entailed.push_back( c0 );
  _composed.push_back( c0 );

  using key_type = std::tuple<formula_set, formula_set, std::size_t>;
  std::map<key_type, std::size_t> seen;
  for ( std::size_t t = 1;; ++t )
  {
    const auto& prev = _composed[t - 1];
    formula_set c;
    for ( auto x : psf( rewrite_under( f, prev ) ) )
    {
      if ( oracle.holds_on_suffix( wc( x ), t - 1 ) )
      {
        c.insert( x );
      }
    }
    formula_set composed;
    for ( auto x : ps )
    {
      if ( is_weak( rewrite_under( rewrite_under( x, prev ), c ) ) )
      {
        composed.insert( x );
      }
    }
    if ( t > w.prefix.size() )
    {
      key_type key{ composed, c, w.phase( t ) };
      if ( auto it = seen.find( key ); it != seen.end() )
      {
        _loop_start = it->second;
        return;
      }
      seen.emplace( std::move( key ), t );
    }
    _entailed.push_back( std::move( c ) );
    _composed.push_back( std::move( composed ) );
  }
}

std::size_t entailment_trace::index( std::size_t t ) const noexcept
{
  if ( t < _entailed.size() )
  {
    return t;
  }
  return _loop_start + ( t - _loop_start ) % loop_length();
}

std::vector<formula_set> entailment_trace::entailed_sequence( std::size_t t ) const
{
  std::vector<formula_set> out;
  for ( std::size_t s = 0; s <= t; ++s )
  {
    out.push_back( entailed( s ) );
  }
  return out;
}

formula_set entailed_set( formula f, const lasso_word& w, std::size_t t )
{
  return entailment_trace( f, w ).entailed( t );
}

formula_set composed_entailed( formula f, const lasso_word& w, std::size_t t )
{
  return compose_sequence( f, entailment_trace( f, w ).entailed_sequence( t ) );
}

/* stability */

limit_sets compute_limit_sets( formula f, evaluator& ev, std::size_t t )
{
  limit_sets out;
  for ( auto x : mu_set( f ) )
  {
    if ( ev.holds( eventually( x ), t ) )
    {
      out.f.insert( x );
    }
    if ( ev.holds( globally( eventually( x ) ), t ) )
    {
      out.gf.insert( x );
    }
  }
  for ( auto x : nu_set( f ) )
  {
    if ( ev.holds( globally( x ), t ) )
    {
      out.g.insert( x );
    }
    if ( ev.holds( eventually( globally( x ) ), t ) )
    {
      out.fg.insert( x );
    }
  }
  return out;
}

limit_sets compute_limit_sets( formula f, const lasso_word& w, std::size_t t )
{
  evaluator ev( w );
  return compute_limit_sets( f, ev, t );
}

std::size_t stability_index( formula f, const lasso_word& w )
{
  evaluator ev( w );
  const auto bound = w.prefix.size() + w.period.size() * ( sff( f ).size() + 1 );
  for ( std::size_t r = 0; r <= bound; ++r )
  {
    const auto s = compute_limit_sets( f, ev, r );
    if ( s.f == s.gf && s.g == s.fg )
    {
      return r;
    }
  }
  throw std::logic_error( "no stability index within the search bound" );
}

master_report check_master( formula f, const lasso_word& w )
{
  master_report report;
  report.stability_index = stability_index( f, w );
  report.holds = holds( f, w, 0 );

  const auto r = report.stability_index;
  const entailment_trace trace( f, w );
  suffix_oracle oracle( w );

  const auto mu = mu_set( f );
  const auto nu = nu_set( f );
  const std::vector<formula> mus( mu.begin(), mu.end() );
  const std::vector<formula> nus( nu.begin(), nu.end() );
  const auto progressed = af_loc_ext( f, w.slice( 0, r ), trace.entailed_sequence( r ) );
  const auto& composed_r = trace.composed( r );
  const auto loop_end = trace.loop_start() + trace.loop_length();

  for ( std::size_t mm = 0; mm < ( std::size_t{ 1 } << mus.size() ); ++mm )
  {
    formula_set m;
    for ( std::size_t i = 0; i < mus.size(); ++i )
    {
      if ( mm & ( std::size_t{ 1 } << i ) )
      {
        m.insert( mus[i] );
      }
    }
    if ( !oracle.holds_on_suffix( rewrite_M( progressed, rewrite_set( m, composed_r ) ), r ) )
    {
      continue;
    }
    for ( std::size_t nn = 0; nn < ( std::size_t{ 1 } << nus.size() ); ++nn )
    {
      formula_set n;
      for ( std::size_t i = 0; i < nus.size(); ++i )
      {
        if ( nn & ( std::size_t{ 1 } << i ) )
        {
          n.insert( nus[i] );
        }
      }

      bool ok = true;
      for ( auto psi : m )
      {
        bool recurring = false;
        for ( auto t = trace.loop_start(); t < loop_end && !recurring; ++t )
        {
          const auto& c = trace.composed( t );
          recurring = oracle.holds_on_suffix( eventually( rewrite_N( rewrite_under( psi, c ), rewrite_set( n, c ) ) ), t );
        }
        ok = ok && recurring;
      }
      for ( auto psi : n )
      {
        if ( !ok )
        {
          break;
        }
        bool somewhere = false;
        for ( std::size_t t = 0; t < loop_end && !somewhere; ++t )
        {
          const auto& c = trace.composed( t );
          somewhere = oracle.holds_on_suffix( globally( rewrite_M( rewrite_under( psi, c ), rewrite_set( m, c ) ) ), t );
        }
        ok = somewhere;
      }
      if ( ok )
      {
        report.premises_satisfiable = true;
        report.witness_m = m;
        report.witness_n = n;
        return report;
      }
    }
  }
  return report;
}

} // namespace pltl
