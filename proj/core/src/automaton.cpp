#include <pltl/automaton.hpp>

#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace pltl
{

namespace
{

struct vector_hash
{
  std::size_t operator()( const std::vector<std::uint32_t>& v ) const noexcept
  {
    std::size_t h = v.size();
    for ( auto x : v )
    {
      h ^= x + 0x9e3779b97f4a7c15ULL + ( h << 6 ) + ( h >> 2 );
    }
    return h;
  }
};

/// Breadth-first exploration of a product whose states are id tuples.
class product_builder
{
public:
  product_builder( std::vector<std::string> ap, std::size_t max_states ) : _max_states( max_states )
  {
    _out.ap = std::move( ap );
  }

  template<typename Label>
  std::uint32_t intern( std::vector<std::uint32_t> key, Label&& make_label )
  {
    if ( auto it = _ids.find( key ); it != _ids.end() )
    {
      return it->second;
    }
    if ( _tuples.size() >= _max_states )
    {
      throw resource_limit_error( "state budget of " + std::to_string( _max_states ) + " exceeded" );
    }
    const auto id = static_cast<std::uint32_t>( _tuples.size() );
    _ids.emplace( key, id );
    _tuples.push_back( std::move( key ) );
    _out.labels.push_back( make_label( _tuples.back() ) );
    _queue.push_back( id );
    return id;
  }

  template<typename Successor>
  omega_automaton run( Successor&& successor )
  {
    const auto letters = _out.letter_count();
    while ( !_queue.empty() )
    {
      const auto id = _queue.front();
      _queue.pop_front();
      if ( _out.delta.size() < ( id + 1 ) * letters )
      {
        _out.delta.resize( ( id + 1 ) * letters );
      }
      const auto tuple = _tuples[id];
      for ( std::uint32_t l = 0; l < letters; ++l )
      {
        _out.delta[id * letters + l] = successor( tuple, l );
      }
    }
    _out.delta.resize( _tuples.size() * letters );
    return std::move( _out );
  }

  const std::vector<std::uint32_t>& tuple( std::uint32_t id ) const { return _tuples[id]; }
  std::size_t size() const noexcept { return _tuples.size(); }
  omega_automaton& out() noexcept { return _out; }

private:
  std::size_t _max_states;
  omega_automaton _out;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, vector_hash> _ids;
  std::vector<std::vector<std::uint32_t>> _tuples;
  std::deque<std::uint32_t> _queue;
};

void require_same_ap( const std::vector<omega_automaton>& autos, const std::vector<std::string>& ap )
{
  for ( const auto& a : autos )
  {
    if ( a.ap != ap )
    {
      throw std::invalid_argument( "automata over different alphabets" );
    }
  }
}

} // namespace

std::uint32_t encode_letter( const std::vector<std::string>& ap, const letter& l )
{
  std::uint32_t mask = 0;
  for ( std::size_t i = 0; i < ap.size(); ++i )
  {
    if ( l.count( ap[i] ) )
    {
      mask |= std::uint32_t{ 1 } << i;
    }
  }
  return mask;
}

letter decode_letter( const std::vector<std::string>& ap, std::uint32_t mask )
{
  letter l;
  for ( std::size_t i = 0; i < ap.size(); ++i )
  {
    if ( mask & ( std::uint32_t{ 1 } << i ) )
    {
      l.insert( ap[i] );
    }
  }
  return l;
}

explicit_runner::explicit_runner( acceptance_kind kind, std::size_t bed_states, std::size_t letters,
                                  std::uint32_t initial, std::vector<std::uint32_t> delta, std::vector<bool> acc )
    : _kind( kind ), _bed_states( bed_states ), _letters( letters ), _initial( initial ), _delta( std::move( delta ) ),
      _acc( std::move( acc ) )
{
  if ( _delta.size() != _acc.size() * _bed_states * _letters )
  {
    throw std::invalid_argument( "runner transition table has the wrong size" );
  }
}

std::uint32_t explicit_runner::step( std::uint32_t state, std::uint32_t bed_next, std::uint32_t letter )
{
  return _delta.at( ( state * _bed_states + bed_next ) * _letters + letter );
}

omega_automaton cascade( const omega_automaton& bed, runner& run, std::size_t max_states )
{
  product_builder pb( bed.ap, max_states );
  auto label = [&]( const std::vector<std::uint32_t>& t ) { return bed.labels[t[0]] + " | " + run.label( t[1] ); };
  const auto q0 = run.initial();
  pb.intern( { bed.initial, q0 }, label );
  pb.out().initial = 0;
  auto a = pb.run( [&]( const std::vector<std::uint32_t>& t, std::uint32_t l ) {
    const auto s_next = bed.successor( t[0], l );
    const auto q_next = run.step( t[1], s_next, l );
    return pb.intern( { s_next, q_next }, label );
  } );
  a.kind = run.kind();
  a.acc.resize( a.state_count() );
  for ( std::uint32_t id = 0; id < a.state_count(); ++id )
  {
    a.acc[id] = run.in_acceptance_set( pb.tuple( id )[1] );
  }
  return a;
}

omega_automaton rabin_conjunction( const std::vector<omega_automaton>& co_buchis,
                                   const std::vector<omega_automaton>& buchis, std::size_t max_states )
{
  if ( co_buchis.empty() && buchis.empty() )
  {
    throw std::invalid_argument( "conjunction of no automata" );
  }
  const auto& ap = co_buchis.empty() ? buchis.front().ap : co_buchis.front().ap;
  require_same_ap( co_buchis, ap );
  require_same_ap( buchis, ap );
  const auto nc = co_buchis.size();
  const auto nb = buchis.size();
  const auto component = [&]( std::size_t i ) -> const omega_automaton& {
    return i < nc ? co_buchis[i] : buchis[i - nc];
  };

  // tuple layout: component states, round-robin counter, tick flag
  auto label = [&]( const std::vector<std::uint32_t>& t ) {
    std::string s = "(";
    for ( std::size_t i = 0; i < nc + nb; ++i )
    {
      s += ( i ? "," : "" ) + std::to_string( t[i] );
    }
    if ( nb > 0 )
    {
      s += "; rr " + std::to_string( t[nc + nb] ) + ( t[nc + nb + 1] ? "*" : "" );
    }
    return s + ")";
  };

  product_builder pb( ap, max_states );
  std::vector<std::uint32_t> init;
  for ( std::size_t i = 0; i < nc + nb; ++i )
  {
    init.push_back( component( i ).initial );
  }
  init.push_back( 0 );
  init.push_back( 0 );
  pb.intern( init, label );
  auto a = pb.run( [&]( const std::vector<std::uint32_t>& t, std::uint32_t l ) {
    std::vector<std::uint32_t> next;
    next.reserve( t.size() );
    for ( std::size_t i = 0; i < nc + nb; ++i )
    {
      next.push_back( component( i ).successor( t[i], l ) );
    }
    std::uint32_t counter = t[nc + nb];
    std::uint32_t tick = 0;
    if ( nb > 0 && buchis[counter].acc[t[nc + counter]] )
    {
      counter = static_cast<std::uint32_t>( ( counter + 1 ) % nb );
      tick = counter == 0 ? 1 : 0;
    }
    next.push_back( counter );
    next.push_back( tick );
    return pb.intern( std::move( next ), label );
  } );

  a.kind = acceptance_kind::rabin;
  rabin_pair pair{ std::vector<bool>( a.state_count() ), std::vector<bool>( a.state_count() ) };
  for ( std::uint32_t id = 0; id < a.state_count(); ++id )
  {
    const auto& t = pb.tuple( id );
    bool rejecting = false;
    for ( std::size_t i = 0; i < nc; ++i )
    {
      rejecting = rejecting || co_buchis[i].acc[t[i]];
    }
    pair.fin[id] = rejecting;
    pair.inf[id] = nb == 0 || t[nc + nb + 1] == 1;
  }
  a.pairs.push_back( std::move( pair ) );
  return a;
}

omega_automaton to_rabin( const omega_automaton& a )
{
  omega_automaton r = a;
  r.kind = acceptance_kind::rabin;
  r.acc.clear();
  const auto n = a.state_count();
  switch ( a.kind )
  {
  case acceptance_kind::buchi: r.pairs = { { std::vector<bool>( n, false ), a.acc } }; break;
  case acceptance_kind::co_buchi: r.pairs = { { a.acc, std::vector<bool>( n, true ) } }; break;
  case acceptance_kind::rabin: break;
  case acceptance_kind::none: r.pairs.clear(); break;
  }
  return r;
}

omega_automaton rabin_union( const std::vector<omega_automaton>& autos, std::size_t max_states )
{
  if ( autos.empty() )
  {
    throw std::invalid_argument( "union of no automata" );
  }
  require_same_ap( autos, autos.front().ap );
  std::vector<omega_automaton> comps;
  comps.reserve( autos.size() );
  for ( const auto& a : autos )
  {
    comps.push_back( to_rabin( a ) );
  }
  if ( comps.size() == 1 )
  {
    return comps.front();
  }

  auto label = []( const std::vector<std::uint32_t>& t ) {
    std::string s = "[";
    for ( std::size_t i = 0; i < t.size(); ++i )
    {
      s += ( i ? "," : "" ) + std::to_string( t[i] );
    }
    return s + "]";
  };
  product_builder pb( comps.front().ap, max_states );
  std::vector<std::uint32_t> init;
  for ( const auto& c : comps )
  {
    init.push_back( c.initial );
  }
  pb.intern( init, label );
  auto a = pb.run( [&]( const std::vector<std::uint32_t>& t, std::uint32_t l ) {
    std::vector<std::uint32_t> next;
    next.reserve( t.size() );
    for ( std::size_t i = 0; i < comps.size(); ++i )
    {
      next.push_back( comps[i].successor( t[i], l ) );
    }
    return pb.intern( std::move( next ), label );
  } );

  a.kind = acceptance_kind::rabin;
  const auto n = a.state_count();
  for ( std::size_t i = 0; i < comps.size(); ++i )
  {
    for ( const auto& p : comps[i].pairs )
    {
      rabin_pair lifted{ std::vector<bool>( n ), std::vector<bool>( n ) };
      for ( std::uint32_t id = 0; id < n; ++id )
      {
        const auto s = pb.tuple( id )[i];
        lifted.fin[id] = p.fin[s];
        lifted.inf[id] = p.inf[s];
      }
      a.pairs.push_back( std::move( lifted ) );
    }
  }
  return a;
}

bool accepts( const omega_automaton& a, const lasso_word& w )
{
  std::map<std::pair<std::uint32_t, std::size_t>, std::size_t> seen;
  std::vector<std::uint32_t> run;
  auto s = a.initial;
  std::size_t loop_from = 0;
  for ( std::size_t t = 0;; ++t )
  {
    if ( t >= w.prefix.size() )
    {
      auto [it, inserted] = seen.emplace( std::make_pair( s, w.phase( t ) ), t );
      if ( !inserted )
      {
        loop_from = it->second;
        break;
      }
    }
    run.push_back( s );
    s = a.successor( s, encode_letter( a.ap, w.at( t ) ) );
  }
  const std::set<std::uint32_t> inf( run.begin() + static_cast<std::ptrdiff_t>( loop_from ), run.end() );
  auto any = [&]( const std::vector<bool>& set ) {
    for ( auto q : inf )
    {
      if ( set[q] )
      {
        return true;
      }
    }
    return false;
  };
  switch ( a.kind )
  {
  case acceptance_kind::none: return false;
  case acceptance_kind::buchi: return any( a.acc );
  case acceptance_kind::co_buchi: return !any( a.acc );
  case acceptance_kind::rabin:
    for ( const auto& p : a.pairs )
    {
      if ( !any( p.fin ) && any( p.inf ) )
      {
        return true;
      }
    }
    return false;
  }
  return false;
}

audit_report audit( const omega_automaton& a )
{
  const auto n = a.state_count();
  auto fail = []( std::string msg ) { return audit_report{ false, std::move( msg ) }; };
  if ( n == 0 )
  {
    return fail( "automaton has no states" );
  }
  if ( std::set<std::string>( a.ap.begin(), a.ap.end() ).size() != a.ap.size() )
  {
    return fail( "duplicate atomic propositions" );
  }
  if ( a.initial >= n )
  {
    return fail( "initial state out of range" );
  }
  if ( a.delta.size() != n * a.letter_count() )
  {
    return fail( "transition table is not total: expected " + std::to_string( n * a.letter_count() ) + " entries, got " +
                 std::to_string( a.delta.size() ) );
  }
  for ( auto q : a.delta )
  {
    if ( q >= n )
    {
      return fail( "successor out of range" );
    }
  }
  if ( ( a.kind == acceptance_kind::buchi || a.kind == acceptance_kind::co_buchi ) && a.acc.size() != n )
  {
    return fail( "acceptance set does not cover the state space" );
  }
  for ( const auto& p : a.pairs )
  {
    if ( p.fin.size() != n || p.inf.size() != n )
    {
      return fail( "Rabin pair does not cover the state space" );
    }
  }
  return {};
}

} // namespace pltl
