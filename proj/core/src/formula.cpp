#include <pltl/formula.hpp>

#include <deque>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace pltl
{

struct formula_node
{
  op kind;
  formula lhs;
  formula rhs;
  std::string name;
  std::uint32_t id;
  std::size_t hash;
};

namespace
{

struct node_key
{
  op kind;
  const formula_node* lhs;
  const formula_node* rhs;
  std::string name;

  bool operator==( const node_key& o ) const noexcept
  {
    return kind == o.kind && lhs == o.lhs && rhs == o.rhs && name == o.name;
  }
};

std::size_t mix( std::size_t seed, std::size_t v ) noexcept
{
  return seed ^ ( v + 0x9e3779b97f4a7c15ULL + ( seed << 6 ) + ( seed >> 2 ) );
}

struct node_key_hash
{
  std::size_t operator()( const node_key& k ) const noexcept
  {
    std::size_t h = static_cast<std::size_t>( k.kind );
    h = mix( h, std::hash<const void*>{}( k.lhs ) );
    h = mix( h, std::hash<const void*>{}( k.rhs ) );
    h = mix( h, std::hash<std::string>{}( k.name ) );
    return h;
  }
};

class interner
{
public:
  static interner& instance()
  {
    static interner inst;
    return inst;
  }

  formula intern( op kind, formula lhs, formula rhs, std::string_view name )
  {
    node_key key{ kind, lhs.node(), rhs.node(), std::string( name ) };
    std::lock_guard lock( _mutex );
    if ( auto it = _table.find( key ); it != _table.end() )
    {
      return formula( it->second );
    }
    const auto id = static_cast<std::uint32_t>( _nodes.size() );
    const auto h = mix( node_key_hash{}( key ), id );
    auto& n = _nodes.emplace_back( formula_node{ kind, lhs, rhs, key.name, id, h } );
    _table.emplace( std::move( key ), &n );
    return formula( &n );
  }

  std::size_t size()
  {
    std::lock_guard lock( _mutex );
    return _nodes.size();
  }

private:
  std::mutex _mutex;
  std::deque<formula_node> _nodes;
  std::unordered_map<node_key, const formula_node*, node_key_hash> _table;
};

formula intern( op kind, formula lhs = {}, formula rhs = {}, std::string_view name = {} )
{
  return interner::instance().intern( kind, lhs, rhs, name );
}

void require( formula f, const char* what )
{
  if ( !f.valid() )
  {
    throw std::invalid_argument( std::string( "null operand for " ) + what );
  }
}

} // namespace

bool is_unary( op k ) noexcept
{
  return k == op::next || k == op::yesterday || k == op::weak_yesterday;
}

bool is_binary( op k ) noexcept
{
  switch ( k )
  {
  case op::and_:
  case op::or_:
  case op::until:
  case op::weak_until:
  case op::release:
  case op::strong_release:
  case op::since:
  case op::weak_since:
  case op::back:
  case op::weak_back:
    return true;
  default:
    return false;
  }
}

bool is_past( op k ) noexcept
{
  switch ( k )
  {
  case op::yesterday:
  case op::weak_yesterday:
  case op::since:
  case op::weak_since:
  case op::back:
  case op::weak_back:
    return true;
  default:
    return false;
  }
}

bool is_future( op k ) noexcept
{
  switch ( k )
  {
  case op::next:
  case op::until:
  case op::weak_until:
  case op::release:
  case op::strong_release:
    return true;
  default:
    return false;
  }
}

std::string_view op_name( op k ) noexcept
{
  switch ( k )
  {
  case op::tt: return "tt";
  case op::ff: return "ff";
  case op::prop: return "prop";
  case op::neg_prop: return "!";
  case op::and_: return "&";
  case op::or_: return "|";
  case op::next: return "X";
  case op::until: return "U";
  case op::weak_until: return "W";
  case op::release: return "R";
  case op::strong_release: return "M";
  case op::yesterday: return "Y";
  case op::weak_yesterday: return "wY";
  case op::since: return "S";
  case op::weak_since: return "wS";
  case op::back: return "B";
  case op::weak_back: return "wB";
  }
  return "?";
}

op formula::kind() const noexcept { return _node->kind; }
formula formula::lhs() const noexcept { return _node->lhs; }
formula formula::rhs() const noexcept { return _node->rhs; }
const std::string& formula::name() const noexcept { return _node->name; }
std::uint32_t formula::id() const noexcept { return _node->id; }
std::size_t formula::hash() const noexcept { return _node->hash; }

formula tt() { return intern( op::tt ); }
formula ff() { return intern( op::ff ); }

formula prop( std::string_view name )
{
  if ( name.empty() )
  {
    throw std::invalid_argument( "empty proposition name" );
  }
  return intern( op::prop, {}, {}, name );
}

formula neg_prop( std::string_view name )
{
  if ( name.empty() )
  {
    throw std::invalid_argument( "empty proposition name" );
  }
  return intern( op::neg_prop, {}, {}, name );
}

formula make_unary( op kind, formula operand )
{
  if ( !is_unary( kind ) )
  {
    throw std::invalid_argument( "not a unary operator: " + std::string( op_name( kind ) ) );
  }
  require( operand, "unary operator" );
  return intern( kind, operand );
}

formula make_binary( op kind, formula lhs, formula rhs )
{
  if ( !is_binary( kind ) )
  {
    throw std::invalid_argument( "not a binary operator: " + std::string( op_name( kind ) ) );
  }
  require( lhs, "binary operator" );
  require( rhs, "binary operator" );
  return intern( kind, lhs, rhs );
}

formula with_operands( formula f, formula lhs, formula rhs )
{
  if ( is_unary( f.kind() ) )
  {
    return lhs == f.lhs() ? f : make_unary( f.kind(), lhs );
  }
  if ( is_binary( f.kind() ) )
  {
    return ( lhs == f.lhs() && rhs == f.rhs() ) ? f : make_binary( f.kind(), lhs, rhs );
  }
  return f;
}

formula make_and( formula a, formula b ) { return make_binary( op::and_, a, b ); }
formula make_or( formula a, formula b ) { return make_binary( op::or_, a, b ); }
formula next( formula a ) { return make_unary( op::next, a ); }
formula until( formula a, formula b ) { return make_binary( op::until, a, b ); }
formula weak_until( formula a, formula b ) { return make_binary( op::weak_until, a, b ); }
formula release( formula a, formula b ) { return make_binary( op::release, a, b ); }
formula strong_release( formula a, formula b ) { return make_binary( op::strong_release, a, b ); }
formula yesterday( formula a ) { return make_unary( op::yesterday, a ); }
formula weak_yesterday( formula a ) { return make_unary( op::weak_yesterday, a ); }
formula since( formula a, formula b ) { return make_binary( op::since, a, b ); }
formula weak_since( formula a, formula b ) { return make_binary( op::weak_since, a, b ); }
formula back( formula a, formula b ) { return make_binary( op::back, a, b ); }
formula weak_back( formula a, formula b ) { return make_binary( op::weak_back, a, b ); }

formula eventually( formula a ) { return until( tt(), a ); }
formula globally( formula a ) { return weak_until( a, ff() ); }
formula once( formula a ) { return since( tt(), a ); }
formula historically( formula a ) { return weak_since( a, ff() ); }

namespace
{

op dual_op( op k )
{
  switch ( k )
  {
  case op::and_: return op::or_;
  case op::or_: return op::and_;
  case op::next: return op::next;
  case op::until: return op::release;
  case op::release: return op::until;
  case op::weak_until: return op::strong_release;
  case op::strong_release: return op::weak_until;
  case op::yesterday: return op::weak_yesterday;
  case op::weak_yesterday: return op::yesterday;
  case op::since: return op::weak_back;
  case op::weak_back: return op::since;
  case op::weak_since: return op::back;
  case op::back: return op::weak_since;
  default: return k;
  }
}

formula dual_negate_rec( formula f, std::unordered_map<formula, formula>& memo )
{
  if ( auto it = memo.find( f ); it != memo.end() )
  {
    return it->second;
  }
  formula r;
  switch ( f.kind() )
  {
  case op::tt: r = ff(); break;
  case op::ff: r = tt(); break;
  case op::prop: r = neg_prop( f.name() ); break;
  case op::neg_prop: r = prop( f.name() ); break;
  default:
    if ( is_unary( f.kind() ) )
    {
      r = make_unary( dual_op( f.kind() ), dual_negate_rec( f.lhs(), memo ) );
    }
    else
    {
      r = make_binary( dual_op( f.kind() ), dual_negate_rec( f.lhs(), memo ), dual_negate_rec( f.rhs(), memo ) );
    }
  }
  memo.emplace( f, r );
  return r;
}

template<typename Pred>
void collect( formula f, formula_set& out, Pred&& pred )
{
  if ( !f.valid() || f.is_constant() )
  {
    return;
  }
  if ( pred( f ) && !out.insert( f ).second )
  {
    return;
  }
  if ( is_unary( f.kind() ) )
  {
    collect( f.lhs(), out, pred );
  }
  else if ( is_binary( f.kind() ) )
  {
    collect( f.lhs(), out, pred );
    collect( f.rhs(), out, pred );
  }
}

bool fragment_check( formula f, op excluded_a, op excluded_b )
{
  if ( f.kind() == excluded_a || f.kind() == excluded_b )
  {
    return false;
  }
  if ( is_unary( f.kind() ) )
  {
    return fragment_check( f.lhs(), excluded_a, excluded_b );
  }
  if ( is_binary( f.kind() ) )
  {
    return fragment_check( f.lhs(), excluded_a, excluded_b ) && fragment_check( f.rhs(), excluded_a, excluded_b );
  }
  return true;
}

} // namespace

formula dual_negate( formula f )
{
  std::unordered_map<formula, formula> memo;
  return dual_negate_rec( f, memo );
}

formula_set sff( formula f )
{
  formula_set out;
  collect( f, out, []( formula g ) { return !g.is_boolean(); } );
  return out;
}

formula_set psf( formula f )
{
  formula_set out;
  collect( f, out, []( formula g ) { return g.is_past(); } );
  return out;
}

formula_set mu_set( formula f )
{
  formula_set out;
  collect( f, out, []( formula g ) { return g.kind() == op::until || g.kind() == op::strong_release; } );
  return out;
}

formula_set nu_set( formula f )
{
  formula_set out;
  collect( f, out, []( formula g ) { return g.kind() == op::weak_until || g.kind() == op::release; } );
  return out;
}

std::set<std::string> variables( formula f )
{
  std::set<std::string> out;
  for ( auto g : sff( f ) )
  {
    if ( g.is_propositional() )
    {
      out.insert( g.name() );
    }
  }
  return out;
}

bool in_mu_fragment( formula f ) { return fragment_check( f, op::weak_until, op::release ); }
bool in_nu_fragment( formula f ) { return fragment_check( f, op::until, op::strong_release ); }

size_metrics size( formula f )
{
  size_metrics s;
  if ( f.is_propositional() || f.is_future() )
  {
    ++s.n;
  }
  else if ( f.is_past() )
  {
    ++s.m;
  }
  if ( is_unary( f.kind() ) || is_binary( f.kind() ) )
  {
    const auto l = size( f.lhs() );
    s.n += l.n;
    s.m += l.m;
  }
  if ( is_binary( f.kind() ) )
  {
    const auto r = size( f.rhs() );
    s.n += r.n;
    s.m += r.m;
  }
  return s;
}

std::size_t interned_count() { return interner::instance().size(); }

namespace
{

void print( std::string& out, formula f )
{
  switch ( f.kind() )
  {
  case op::tt: out += "tt"; return;
  case op::ff: out += "ff"; return;
  case op::prop: out += f.name(); return;
  case op::neg_prop:
    out += '!';
    out += f.name();
    return;
  default: break;
  }

  auto sugar = [&]( std::string_view name, formula operand ) {
    out += name;
    out += ' ';
    print( out, operand );
  };
  if ( f.kind() == op::until && f.lhs().kind() == op::tt )
  {
    return sugar( "F", f.rhs() );
  }
  if ( f.kind() == op::weak_until && f.rhs().kind() == op::ff )
  {
    return sugar( "G", f.lhs() );
  }
  if ( f.kind() == op::since && f.lhs().kind() == op::tt )
  {
    return sugar( "O", f.rhs() );
  }
  if ( f.kind() == op::weak_since && f.rhs().kind() == op::ff )
  {
    return sugar( "H", f.lhs() );
  }
  if ( is_unary( f.kind() ) )
  {
    return sugar( op_name( f.kind() ), f.lhs() );
  }
  out += '(';
  print( out, f.lhs() );
  out += ' ';
  out += op_name( f.kind() );
  out += ' ';
  print( out, f.rhs() );
  out += ')';
}

} // namespace

std::string to_string( formula f )
{
  if ( !f.valid() )
  {
    return "<null>";
  }
  std::string out;
  print( out, f );
  return out;
}

std::ostream& operator<<( std::ostream& os, formula f ) { return os << to_string( f ); }

} // namespace pltl
