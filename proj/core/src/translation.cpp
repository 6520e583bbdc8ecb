#include <pltl/translation.hpp>

#include <pltl/past.hpp>
#include <pltl/stability.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pltl
{

namespace
{

struct tuple_hash
{
  std::size_t operator()( const wc_state& t ) const noexcept
  {
    std::size_t h = t.size();
    for ( auto x : t )
    {
      h ^= x.id + 0x9e3779b97f4a7c15ULL + ( h << 6 ) + ( h >> 2 );
    }
    return h;
  }
};

/// Per-set rewrite of the atoms of a Boolean function, cached per atom.
class atom_rewriter
{
public:
  using rewrite_fn = formula ( * )( formula, const formula_set& );

  atom_rewriter( prop_context& ctx, rewrite_fn fn, formula_set set ) : _ctx( ctx ), _fn( fn ), _set( std::move( set ) ) {}

  canonical_bool operator()( canonical_bool z )
  {
    return _ctx.map_atoms( z, [this]( formula a ) {
      if ( auto it = _cache.find( a ); it != _cache.end() )
      {
        return it->second;
      }
      const auto r = _ctx.canonicalize( _fn( a, _set ) );
      _cache.emplace( a, r );
      return r;
    } );
  }

private:
  prop_context& _ctx;
  rewrite_fn _fn;
  formula_set _set;
  std::unordered_map<formula, canonical_bool> _cache;
};

/// Runner whose states are interned keys over canonical functions.
class formula_runner : public runner
{
public:
  explicit formula_runner( translation_context& ctx ) : _ctx( ctx ) {}

protected:
  std::uint32_t intern( std::uint64_t key )
  {
    auto [it, inserted] = _ids.emplace( key, static_cast<std::uint32_t>( _keys.size() ) );
    if ( inserted )
    {
      _keys.push_back( key );
    }
    return it->second;
  }
  [[nodiscard]] std::uint64_t key( std::uint32_t state ) const { return _keys.at( state ); }
  [[nodiscard]] std::string show( canonical_bool z ) { return to_string( _ctx.props().to_formula( z ) ); }

  translation_context& _ctx;

private:
  std::unordered_map<std::uint64_t, std::uint32_t> _ids;
  std::vector<std::uint64_t> _keys;
};

/// Shared shape of the Buchi (mu) and co-Buchi (nu) recurrence runners.
class recurrence_runner : public formula_runner
{
public:
  recurrence_runner( translation_context& ctx, formula psi, const formula_set& set, bool mu )
      : formula_runner( ctx ), _mu( mu )
  {
    auto& props = ctx.props();
    const auto fn = mu ? &rewrite_N : &rewrite_M;
    for ( const auto& c : ctx.past_sets() )
    {
      const auto rewritten_set = rewrite_set( set, c );
      const auto target = fn( rewrite_under( psi, c ), rewritten_set );
      _heads.push_back( props.canonicalize( mu ? eventually( target ) : globally( target ) ) );
      _rewriters.emplace_back( props, fn, rewritten_set );
    }
    const auto target = fn( psi, set );
    _initial = props.canonicalize( mu ? eventually( target ) : globally( target ) );
  }

  [[nodiscard]] acceptance_kind kind() const override { return _mu ? acceptance_kind::buchi : acceptance_kind::co_buchi; }
  [[nodiscard]] std::uint32_t initial() override { return intern( _initial.id ); }

  [[nodiscard]] std::uint32_t step( std::uint32_t state, std::uint32_t bed_next, std::uint32_t l ) override
  {
    const canonical_bool z{ static_cast<std::uint32_t>( key( state ) ) };
    if ( in_acceptance_set( state ) )
    {
      return intern( restart( bed_next ).id );
    }
    return intern( _ctx.engine().af( z, _ctx.letter_of( l ) ).id );
  }

  [[nodiscard]] bool in_acceptance_set( std::uint32_t state ) override
  {
    const canonical_bool z{ static_cast<std::uint32_t>( key( state ) ) };
    return _mu ? _ctx.props().is_true( z ) : _ctx.props().is_false( z );
  }

  [[nodiscard]] std::string label( std::uint32_t state ) override
  {
    return show( { static_cast<std::uint32_t>( key( state ) ) } );
  }

private:
  canonical_bool restart( std::uint32_t bed )
  {
    if ( auto it = _restarts.find( bed ); it != _restarts.end() )
    {
      return it->second;
    }
    auto& props = _ctx.props();
    const auto& xi = _ctx.bed_tuple( bed );
    auto result = props.bottom();
    for ( std::size_t i = 0; i < xi.size(); ++i )
    {
      if ( props.is_false( xi[i] ) )
      {
        continue;
      }
      result = props.disj( result, props.conj( _heads[i], _rewriters[i]( xi[i] ) ) );
    }
    _restarts.emplace( bed, result );
    return result;
  }

  bool _mu;
  canonical_bool _initial;
  std::vector<canonical_bool> _heads;
  std::vector<atom_rewriter> _rewriters;
  std::unordered_map<std::uint32_t, canonical_bool> _restarts;
};

class stability_runner : public formula_runner
{
public:
  stability_runner( translation_context& ctx, const formula_set& m ) : formula_runner( ctx )
  {
    auto& props = ctx.props();
    for ( const auto& c : ctx.past_sets() )
    {
      _rewriters.emplace_back( props, &rewrite_M, rewrite_set( m, c ) );
    }
    _initial = { props.canonicalize( ctx.phi() ), props.canonicalize( rewrite_M( ctx.phi(), m ) ) };
  }

  [[nodiscard]] acceptance_kind kind() const override { return acceptance_kind::co_buchi; }
  [[nodiscard]] std::uint32_t initial() override { return intern( pack( _initial.first, _initial.second ) ); }

  [[nodiscard]] std::uint32_t step( std::uint32_t state, std::uint32_t bed_next, std::uint32_t l ) override
  {
    auto& props = _ctx.props();
    auto& engine = _ctx.engine();
    const auto& sigma = _ctx.letter_of( l );
    const auto [psi, zeta] = unpack( key( state ) );
    const auto psi_next = engine.af( psi, sigma );
    if ( !props.is_false( zeta ) )
    {
      return intern( pack( psi_next, engine.af( zeta, sigma ) ) );
    }
    const auto& xi = _ctx.bed_tuple( bed_next );
    auto guess = props.bottom();
    for ( std::size_t i = 0; i < xi.size(); ++i )
    {
      if ( props.is_false( xi[i] ) )
      {
        continue;
      }
      guess = props.disj( guess, props.conj( _rewriters[i]( psi_next ), _rewriters[i]( xi[i] ) ) );
    }
    return intern( pack( psi_next, guess ) );
  }

  [[nodiscard]] bool in_acceptance_set( std::uint32_t state ) override
  {
    return _ctx.props().is_false( unpack( key( state ) ).second );
  }

  [[nodiscard]] std::string label( std::uint32_t state ) override
  {
    const auto [psi, zeta] = unpack( key( state ) );
    return "<" + show( psi ) + ", " + show( zeta ) + ">";
  }

private:
  static std::uint64_t pack( canonical_bool a, canonical_bool b ) { return ( std::uint64_t{ a.id } << 32 ) | b.id; }
  static std::pair<canonical_bool, canonical_bool> unpack( std::uint64_t k )
  {
    return { canonical_bool{ static_cast<std::uint32_t>( k >> 32 ) }, canonical_bool{ static_cast<std::uint32_t>( k ) } };
  }

  std::pair<canonical_bool, canonical_bool> _initial;
  std::vector<atom_rewriter> _rewriters;
};

std::vector<std::string> default_ap( formula phi, std::vector<std::string> ap )
{
  const auto vars = variables( phi );
  if ( ap.empty() )
  {
    return { vars.begin(), vars.end() };
  }
  for ( const auto& v : vars )
  {
    if ( std::find( ap.begin(), ap.end(), v ) == ap.end() )
    {
      throw std::invalid_argument( "alphabet misses proposition '" + v + "'" );
    }
  }
  return ap;
}

} // namespace

translation_context::translation_context( formula phi, std::vector<std::string> ap )
    : _phi( phi ), _ap( default_ap( phi, std::move( ap ) ) ), _engine( _props )
{
  if ( _ap.size() > 16 )
  {
    throw resource_limit_error( "alphabet of " + std::to_string( _ap.size() ) + " propositions is too large" );
  }
  for ( std::uint32_t mask = 0; mask < ( std::uint32_t{ 1 } << _ap.size() ); ++mask )
  {
    _letters.push_back( decode_letter( _ap, mask ) );
  }
  _sets = enumerate_past_sets( phi );
  _j.resize( _sets.size() );
  _rewritten.resize( _sets.size() );
  _wc_conj.resize( _sets.size() );
  for ( std::size_t i = 0; i < _sets.size(); ++i )
  {
    _j[i] = rewrite_indices_for( phi, _sets, i );
    for ( auto j : _j[i] )
    {
      _rewritten[i].push_back( rewrite_set( _sets[i], _sets[j] ) );
      auto conj = _props.top();
      for ( const auto& xi : _sets[i] )
      {
        conj = _props.conj( conj, _props.canonicalize( wc( rewrite_under( xi, _sets[j] ) ) ) );
      }
      _wc_conj[i].push_back( conj );
    }
  }
}

translation_context::~translation_context() = default;

wc_state translation_context::initial_tuple()
{
  wc_state t( _sets.size(), _props.bottom() );
  t[0] = _props.top();
  return t;
}

canonical_bool translation_context::wc_image( std::size_t i, std::size_t jj, const letter& sigma )
{
  const auto key = std::make_tuple( i, jj, encode_letter( _ap, sigma ) );
  if ( auto it = _wc_image_cache.find( key ); it != _wc_image_cache.end() )
  {
    return it->second;
  }
  const auto r = _engine.af_loc( _wc_conj[i][jj], sigma, _rewritten[i][jj] );
  _wc_image_cache.emplace( key, r );
  return r;
}

wc_state translation_context::rc( const wc_state& tuple, const letter& sigma )
{
  if ( tuple.size() != _sets.size() )
  {
    throw std::invalid_argument( "tuple arity does not match the number of past sets" );
  }
  wc_state out( _sets.size(), _props.bottom() );
  for ( std::size_t i = 0; i < _sets.size(); ++i )
  {
    for ( std::size_t jj = 0; jj < _j[i].size(); ++jj )
    {
      const auto j = _j[i][jj];
      if ( _props.is_false( tuple[j] ) )
      {
        continue;
      }
      const auto guard = wc_image( i, jj, sigma );
      if ( _props.is_false( guard ) )
      {
        continue;
      }
      const auto image = _engine.af_loc( tuple[j], sigma, _rewritten[i][jj] );
      out[i] = _props.disj( out[i], _props.conj( image, guard ) );
    }
  }
  return out;
}

const omega_automaton& translation_context::wc_automaton( std::size_t max_states )
{
  if ( _bed )
  {
    return *_bed;
  }
  auto bed = std::make_unique<omega_automaton>();
  bed->ap = _ap;
  bed->kind = acceptance_kind::none;
  std::unordered_map<wc_state, std::uint32_t, tuple_hash> ids;
  auto intern = [&]( wc_state t ) {
    auto [it, inserted] = ids.emplace( t, static_cast<std::uint32_t>( _bed_tuples.size() ) );
    if ( inserted )
    {
      if ( _bed_tuples.size() >= max_states )
      {
        _bed_tuples.clear();
        throw resource_limit_error( "weakening-conditions automaton exceeds " + std::to_string( max_states ) +
                                    " states" );
      }
      _bed_tuples.push_back( std::move( t ) );
    }
    return it->second;
  };
  intern( initial_tuple() );
  const auto letters = bed->letter_count();
  for ( std::uint32_t s = 0; s < _bed_tuples.size(); ++s )
  {
    bed->delta.resize( ( s + 1 ) * letters );
    for ( std::uint32_t l = 0; l < letters; ++l )
    {
      const auto next = rc( _bed_tuples[s], _letters[l] );
      bed->delta[s * letters + l] = intern( next );
    }
  }
  for ( std::uint32_t s = 0; s < _bed_tuples.size(); ++s )
  {
    bed->labels.push_back( "H" + std::to_string( s ) );
  }
  _bed = std::move( bed );
  return *_bed;
}

std::unique_ptr<runner> translation_context::make_b2( formula psi, const formula_set& n )
{
  return std::make_unique<recurrence_runner>( *this, psi, n, true );
}

std::unique_ptr<runner> translation_context::make_c3( formula psi, const formula_set& m )
{
  return std::make_unique<recurrence_runner>( *this, psi, m, false );
}

std::unique_ptr<runner> translation_context::make_c1( const formula_set& m )
{
  return std::make_unique<stability_runner>( *this, m );
}

omega_automaton translation_context::build_rabin_component( const formula_set& m, const formula_set& n,
                                                            std::size_t max_states )
{
  const auto& bed = wc_automaton( max_states );
  std::vector<omega_automaton> co_buchis;
  std::vector<omega_automaton> buchis;
  co_buchis.push_back( cascade( bed, *make_c1( m ), max_states ) );
  for ( const auto& psi : n )
  {
    co_buchis.push_back( cascade( bed, *make_c3( psi, m ), max_states ) );
  }
  for ( const auto& psi : m )
  {
    buchis.push_back( cascade( bed, *make_b2( psi, n ), max_states ) );
  }
  return rabin_conjunction( co_buchis, buchis, max_states );
}

std::vector<formula_set> subsets( const formula_set& s )
{
  const std::vector<formula> elems( s.begin(), s.end() );
  if ( elems.size() >= 32 )
  {
    throw std::length_error( "too many elements to enumerate subsets" );
  }
  std::vector<std::uint32_t> masks( std::size_t{ 1 } << elems.size() );
  for ( std::uint32_t mask = 0; mask < masks.size(); ++mask )
  {
    masks[mask] = mask;
  }
  std::stable_sort( masks.begin(), masks.end(),
                    []( std::uint32_t a, std::uint32_t b ) { return __builtin_popcount( a ) < __builtin_popcount( b ); } );
  std::vector<formula_set> out;
  out.reserve( masks.size() );
  for ( auto mask : masks )
  {
    formula_set sub;
    for ( std::size_t i = 0; i < elems.size(); ++i )
    {
      if ( mask & ( std::uint32_t{ 1 } << i ) )
      {
        sub.insert( elems[i] );
      }
    }
    out.push_back( std::move( sub ) );
  }
  return out;
}

translation_result translate( formula phi, std::vector<std::string> ap, std::size_t max_states )
{
  translation_context ctx( phi, std::move( ap ) );
  const auto mu = mu_set( phi );
  const auto nu = nu_set( phi );
  std::vector<omega_automaton> components;
  for ( const auto& m : subsets( mu ) )
  {
    for ( const auto& n : subsets( nu ) )
    {
      components.push_back( ctx.build_rabin_component( m, n, max_states ) );
    }
  }
  translation_result result;
  result.stats.branches = components.size();
  result.automaton = rabin_union( components, max_states );
  result.stats.states = result.automaton.state_count();
  result.stats.pairs = result.automaton.pairs.size();
  result.stats.bed_states = ctx.wc_automaton( max_states ).state_count();
  result.stats.past_sets = ctx.past_sets().size();
  result.stats.mu = mu.size();
  result.stats.nu = nu.size();
  result.stats.size = size( phi );
  return result;
}

} // namespace pltl
