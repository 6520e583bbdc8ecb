#include <pltl/after.hpp>
#include <pltl/past.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace pltl
{

namespace
{

formula land( formula a, formula b )
{
  if ( a.kind() == op::ff || b.kind() == op::ff ) return ff();
  if ( a.kind() == op::tt ) return b;
  if ( b.kind() == op::tt || a == b ) return a;
  return make_and( a, b );
}

formula lor( formula a, formula b )
{
  if ( a.kind() == op::tt || b.kind() == op::tt ) return tt();
  if ( a.kind() == op::ff ) return b;
  if ( b.kind() == op::ff || a == b ) return a;
  return make_or( a, b );
}

class local_after
{
public:
  local_after( const letter& sigma, const formula_set& c ) : _sigma( sigma ), _c( c ) {}

  formula af( formula f )
  {
    if ( auto it = _af.find( f ); it != _af.end() )
    {
      return it->second;
    }
    formula r;
    switch ( f.kind() )
    {
    case op::tt:
    case op::ff: r = f; break;
    case op::prop: r = _sigma.count( f.name() ) ? tt() : ff(); break;
    case op::neg_prop: r = _sigma.count( f.name() ) ? ff() : tt(); break;
    case op::and_: r = land( af( f.lhs() ), af( f.rhs() ) ); break;
    case op::or_: r = lor( af( f.lhs() ), af( f.rhs() ) ); break;
    case op::next: r = pu( f.lhs() ); break;
    case op::yesterday: r = ff(); break;
    case op::weak_yesterday: r = tt(); break;
    case op::until:
    case op::weak_until: r = lor( af( f.rhs() ), land( af( f.lhs() ), pu( f ) ) ); break;
    case op::release:
    case op::strong_release: r = land( af( f.rhs() ), lor( af( f.lhs() ), pu( f ) ) ); break;
    case op::since:
    case op::weak_since:
    case op::back:
    case op::weak_back: r = af( wc( f ) ); break;
    }
    _af.emplace( f, r );
    return r;
  }

  formula pu( formula f )
  {
    if ( auto it = _pu.find( f ); it != _pu.end() )
    {
      return it->second;
    }
    formula r = rewrite_under( f, _c );
    for ( auto x : psf( f ) )
    {
      if ( _c.count( x ) )
      {
        r = land( r, af( wc( x ) ) );
      }
    }
    _pu.emplace( f, r );
    return r;
  }

private:
  const letter& _sigma;
  const formula_set& _c;
  std::unordered_map<formula, formula> _af;
  std::unordered_map<formula, formula> _pu;
};

} // namespace

formula af_loc( formula f, const letter& sigma, const formula_set& c )
{
  return local_after( sigma, c ).af( f );
}

formula pu_loc( formula f, const letter& sigma, const formula_set& c )
{
  return local_after( sigma, c ).pu( f );
}

formula af_loc_ext( formula f, const finite_word& w, const std::vector<formula_set>& cs )
{
  if ( cs.size() != w.size() + 1 )
  {
    throw std::invalid_argument( "af_loc_ext needs one more set than letters" );
  }
  for ( std::size_t t = 0; t < w.size(); ++t )
  {
    f = af_loc( f, w[t], cs[t + 1] );
  }
  return f;
}

formula af( formula f, const letter& sigma )
{
  prop_context ctx;
  after_engine engine( ctx );
  return ctx.to_formula( engine.af( ctx.canonicalize( f ), sigma ) );
}

formula af_ext( formula f, const finite_word& w )
{
  prop_context ctx;
  after_engine engine( ctx );
  return ctx.to_formula( engine.af_ext( ctx.canonicalize( f ), w ) );
}

std::uint32_t after_engine::letter_index( const letter& sigma )
{
  auto [it, inserted] = _letters.emplace( sigma, static_cast<std::uint32_t>( _letters.size() ) );
  return it->second;
}

const std::vector<formula>& after_engine::atom_psf( formula atom )
{
  if ( auto it = _psf_cache.find( atom ); it != _psf_cache.end() )
  {
    return it->second;
  }
  const auto ps = psf( atom );
  return _psf_cache.emplace( atom, std::vector<formula>( ps.begin(), ps.end() ) ).first->second;
}

canonical_bool after_engine::atom_af_loc( formula atom, const letter& sigma, const formula_set& c )
{
  std::vector<std::uint32_t> key_set;
  formula_set relevant;
  for ( auto x : atom_psf( atom ) )
  {
    if ( c.count( x ) )
    {
      key_set.push_back( x.id() );
      relevant.insert( x );
    }
  }
  auto key = std::make_tuple( atom.id(), letter_index( sigma ), std::move( key_set ) );
  if ( auto it = _atom_cache.find( key ); it != _atom_cache.end() )
  {
    return it->second;
  }
  const auto r = _ctx.canonicalize( pltl::af_loc( atom, sigma, relevant ) );
  _atom_cache.emplace( std::move( key ), r );
  return r;
}

canonical_bool after_engine::af_loc( canonical_bool z, const letter& sigma, const formula_set& c )
{
  return _ctx.map_atoms( z, [&]( formula a ) { return atom_af_loc( a, sigma, c ); } );
}

canonical_bool after_engine::af( canonical_bool z, const letter& sigma )
{
  if ( _ctx.is_true( z ) || _ctx.is_false( z ) )
  {
    return z;
  }
  const auto key = ( static_cast<std::uint64_t>( z.id ) << 32 ) | letter_index( sigma );
  if ( auto it = _af_cache.find( key ); it != _af_cache.end() )
  {
    return it->second;
  }

  const auto atoms = _ctx.support( z );
  canonical_bool result;
  if ( past_pool( atoms ).size() <= direct_pool_limit )
  {
    result = enumerate( z, atoms, sigma );
  }
  else
  {
    // z = P & (lo | (y & hi)) for the cube P above the first non-trivial low edge
    auto cube = _ctx.top();
    std::vector<formula> cube_atoms;
    auto rest = z;
    while ( !_ctx.is_true( rest ) && _ctx.is_false( _ctx.decompose( rest ).lo ) )
    {
      const auto d = _ctx.decompose( rest );
      cube = _ctx.conj( cube, _ctx.atom( d.var ) );
      cube_atoms.push_back( d.var );
      rest = d.hi;
    }
    if ( _ctx.is_true( rest ) )
    {
      result = af_cube( cube_atoms, sigma );
    }
    else
    {
      const auto d = _ctx.decompose( rest );
      const auto low = af( _ctx.conj( cube, d.lo ), sigma );
      const auto high = af( _ctx.conj( cube, _ctx.conj( _ctx.atom( d.var ), d.hi ) ), sigma );
      result = _ctx.disj( low, high );
    }
  }
  _af_cache.emplace( key, result );
  return result;
}

std::vector<formula> after_engine::past_pool( const std::vector<formula>& atoms )
{
  formula_set pool;
  for ( auto a : atoms )
  {
    const auto& ps = atom_psf( a );
    pool.insert( ps.begin(), ps.end() );
  }
  return { pool.begin(), pool.end() };
}

canonical_bool after_engine::af_cube( const std::vector<formula>& atoms, const letter& sigma )
{
  // atoms sharing a past subformula must read the same guess; other groups are independent
  std::vector<std::size_t> group( atoms.size() );
  for ( std::size_t i = 0; i < atoms.size(); ++i )
  {
    group[i] = i;
  }
  std::function<std::size_t( std::size_t )> find = [&]( std::size_t i ) {
    return group[i] == i ? i : group[i] = find( group[i] );
  };
  for ( std::size_t i = 0; i < atoms.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < atoms.size(); ++j )
    {
      const auto& pi = atom_psf( atoms[i] );
      const auto& pj = atom_psf( atoms[j] );
      const bool overlap = std::any_of( pi.begin(), pi.end(), [&]( formula x ) {
        return std::find( pj.begin(), pj.end(), x ) != pj.end();
      } );
      if ( overlap )
      {
        group[find( i )] = find( j );
      }
    }
  }
  std::map<std::size_t, std::vector<formula>> components;
  for ( std::size_t i = 0; i < atoms.size(); ++i )
  {
    components[find( i )].push_back( atoms[i] );
  }
  auto result = _ctx.top();
  for ( const auto& [root, members] : components )
  {
    auto cube = _ctx.top();
    for ( auto a : members )
    {
      cube = _ctx.conj( cube, _ctx.atom( a ) );
    }
    result = _ctx.conj( result, enumerate( cube, members, sigma ) );
    if ( _ctx.is_false( result ) )
    {
      break;
    }
  }
  return result;
}

canonical_bool after_engine::enumerate( canonical_bool z, const std::vector<formula>& atoms, const letter& sigma )
{
  const auto members = past_pool( atoms );
  if ( members.size() > 24 )
  {
    throw std::length_error( "too many past subformulae in after-function argument" );
  }

  // image of atom i under every subset of its own past subformulae
  std::vector<std::vector<std::size_t>> bits( atoms.size() );
  std::vector<std::vector<canonical_bool>> table( atoms.size() );
  for ( std::size_t i = 0; i < atoms.size(); ++i )
  {
    const auto& ps = atom_psf( atoms[i] );
    for ( auto x : ps )
    {
      bits[i].push_back( std::lower_bound( members.begin(), members.end(), x ) - members.begin() );
    }
    for ( std::uint64_t local = 0; local < ( std::uint64_t{ 1 } << ps.size() ); ++local )
    {
      formula_set c;
      for ( std::size_t b = 0; b < ps.size(); ++b )
      {
        if ( local & ( std::uint64_t{ 1 } << b ) )
        {
          c.insert( ps[b] );
        }
      }
      table[i].push_back( atom_af_loc( atoms[i], sigma, c ) );
    }
  }

  auto result = _ctx.bottom();
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> images( atoms.size() );
  const std::uint64_t count = std::uint64_t{ 1 } << members.size();
  for ( std::uint64_t mask = 0; mask < count && !_ctx.is_true( result ); ++mask )
  {
    for ( std::size_t i = 0; i < atoms.size(); ++i )
    {
      std::uint64_t local = 0;
      for ( std::size_t b = 0; b < bits[i].size(); ++b )
      {
        if ( mask & ( std::uint64_t{ 1 } << bits[i][b] ) )
        {
          local |= std::uint64_t{ 1 } << b;
        }
      }
      images[i] = table[i][local].id;
    }
    if ( !seen.insert( images ).second )
    {
      continue;
    }
    std::unordered_map<formula, canonical_bool> image_of;
    for ( std::size_t i = 0; i < atoms.size(); ++i )
    {
      image_of.emplace( atoms[i], canonical_bool{ images[i] } );
    }
    result = _ctx.disj( result, _ctx.map_atoms( z, [&]( formula a ) { return image_of.at( a ); } ) );
  }
  return result;
}

canonical_bool after_engine::af_ext( canonical_bool z, const finite_word& w )
{
  for ( const auto& sigma : w )
  {
    z = af( z, sigma );
  }
  return z;
}

} // namespace pltl
