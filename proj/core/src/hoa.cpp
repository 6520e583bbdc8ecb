#include <pltl/hoa.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace pltl
{

namespace
{

std::string quote( const std::string& s )
{
  std::string out = "\"";
  for ( char c : s )
  {
    if ( c == '"' || c == '\\' )
    {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

std::string letter_label( std::size_t ap_count, std::uint32_t mask )
{
  if ( ap_count == 0 )
  {
    return "t";
  }
  std::string out;
  for ( std::size_t i = 0; i < ap_count; ++i )
  {
    if ( i )
    {
      out += '&';
    }
    if ( !( mask & ( std::uint32_t{ 1 } << i ) ) )
    {
      out += '!';
    }
    out += std::to_string( i );
  }
  return out;
}

std::string acceptance_header( const omega_automaton& a )
{
  switch ( a.kind )
  {
  case acceptance_kind::none: return "acc-name: all\nAcceptance: 0 t\n";
  case acceptance_kind::buchi: return "acc-name: Buchi\nAcceptance: 1 Inf(0)\n";
  case acceptance_kind::co_buchi: return "acc-name: co-Buchi\nAcceptance: 1 Fin(0)\n";
  case acceptance_kind::rabin:
  {
    std::string out = "acc-name: Rabin " + std::to_string( a.pairs.size() ) + "\nAcceptance: " +
                      std::to_string( 2 * a.pairs.size() ) + " ";
    if ( a.pairs.empty() )
    {
      return out + "f\n";
    }
    for ( std::size_t i = 0; i < a.pairs.size(); ++i )
    {
      if ( i )
      {
        out += '|';
      }
      out += "(Fin(" + std::to_string( 2 * i ) + ")&Inf(" + std::to_string( 2 * i + 1 ) + "))";
    }
    return out + "\n";
  }
  }
  return {};
}

std::vector<std::size_t> acceptance_marks( const omega_automaton& a, std::uint32_t q )
{
  std::vector<std::size_t> marks;
  switch ( a.kind )
  {
  case acceptance_kind::buchi:
  case acceptance_kind::co_buchi:
    if ( a.acc[q] )
    {
      marks.push_back( 0 );
    }
    break;
  case acceptance_kind::rabin:
    for ( std::size_t i = 0; i < a.pairs.size(); ++i )
    {
      if ( a.pairs[i].fin[q] )
      {
        marks.push_back( 2 * i );
      }
      if ( a.pairs[i].inf[q] )
      {
        marks.push_back( 2 * i + 1 );
      }
    }
    break;
  case acceptance_kind::none: break;
  }
  return marks;
}

} // namespace

std::string export_hoa( const omega_automaton& a, std::string_view name )
{
  std::ostringstream os;
  os << "HOA: v1\n";
  if ( !name.empty() )
  {
    os << "name: " << quote( std::string( name ) ) << "\n";
  }
  os << "States: " << a.state_count() << "\n";
  os << "Start: " << a.initial << "\n";
  os << "AP: " << a.ap.size();
  for ( const auto& p : a.ap )
  {
    os << " " << quote( p );
  }
  os << "\n" << acceptance_header( a );
  os << "properties: trans-labels explicit-labels state-acc deterministic complete\n";
  os << "--BODY--\n";
  for ( std::uint32_t q = 0; q < a.state_count(); ++q )
  {
    os << "State: " << q;
    const auto marks = acceptance_marks( a, q );
    if ( !marks.empty() )
    {
      os << " {";
      for ( std::size_t i = 0; i < marks.size(); ++i )
      {
        os << ( i ? " " : "" ) << marks[i];
      }
      os << "}";
    }
    os << "\n";
    for ( std::uint32_t l = 0; l < a.letter_count(); ++l )
    {
      os << "[" << letter_label( a.ap.size(), l ) << "] " << a.successor( q, l ) << "\n";
    }
  }
  os << "--END--\n";
  return os.str();
}

std::string export_dot( const omega_automaton& a )
{
  auto escape = []( const std::string& s ) {
    std::string out;
    for ( char c : s )
    {
      if ( c == '"' || c == '\\' )
      {
        out += '\\';
      }
      out += c;
    }
    return out;
  };
  auto symbolic = [&]( std::uint32_t mask ) {
    if ( a.ap.empty() )
    {
      return std::string( "true" );
    }
    std::string out;
    for ( std::size_t i = 0; i < a.ap.size(); ++i )
    {
      out += ( i ? "&" : "" );
      out += ( mask & ( std::uint32_t{ 1 } << i ) ) ? a.ap[i] : "!" + a.ap[i];
    }
    return out;
  };

  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n  node [shape=box];\n  init [shape=point];\n";
  os << "  init -> " << a.initial << ";\n";
  for ( std::uint32_t q = 0; q < a.state_count(); ++q )
  {
    std::string marks;
    for ( auto m : acceptance_marks( a, q ) )
    {
      marks += ( marks.empty() ? " {" : " " ) + std::to_string( m );
    }
    if ( !marks.empty() )
    {
      marks += "}";
    }
    os << "  " << q << " [label=\"" << q << ": " << escape( a.labels[q] ) << marks << "\"];\n";
  }
  for ( std::uint32_t q = 0; q < a.state_count(); ++q )
  {
    std::map<std::uint32_t, std::string> by_target;
    for ( std::uint32_t l = 0; l < a.letter_count(); ++l )
    {
      auto& s = by_target[a.successor( q, l )];
      s += ( s.empty() ? "" : " | " ) + symbolic( l );
    }
    for ( const auto& [target, lbl] : by_target )
    {
      os << "  " << q << " -> " << target << " [label=\"" << escape( lbl ) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

namespace
{

std::string trim( std::string_view s )
{
  std::size_t b = 0, e = s.size();
  while ( b < e && std::isspace( static_cast<unsigned char>( s[b] ) ) ) ++b;
  while ( e > b && std::isspace( static_cast<unsigned char>( s[e - 1] ) ) ) --e;
  return std::string( s.substr( b, e - b ) );
}

std::vector<std::string> split_quoted( const std::string& s )
{
  std::vector<std::string> out;
  std::size_t i = 0;
  while ( ( i = s.find( '"', i ) ) != std::string::npos )
  {
    std::string cur;
    ++i;
    while ( i < s.size() && s[i] != '"' )
    {
      if ( s[i] == '\\' && i + 1 < s.size() )
      {
        ++i;
      }
      cur += s[i++];
    }
    ++i;
    out.push_back( cur );
  }
  return out;
}

/// Letters (bit masks) satisfying a conjunction of literals such as `0&!1` or `t`.
std::vector<bool> label_letters( const std::string& label, std::size_t ap_count )
{
  const std::size_t letters = std::size_t{ 1 } << ap_count;
  std::vector<bool> sat( letters, true );
  if ( trim( label ) == "t" )
  {
    return sat;
  }
  std::stringstream ss( label );
  std::string lit;
  while ( std::getline( ss, lit, '&' ) )
  {
    lit = trim( lit );
    bool neg = false;
    if ( !lit.empty() && lit[0] == '!' )
    {
      neg = true;
      lit = trim( lit.substr( 1 ) );
    }
    if ( lit.empty() || lit.find_first_not_of( "0123456789" ) != std::string::npos )
    {
      throw hoa_error( "unsupported label '" + label + "'" );
    }
    const auto idx = std::stoul( lit );
    if ( idx >= ap_count )
    {
      throw hoa_error( "label refers to unknown proposition " + lit );
    }
    for ( std::size_t l = 0; l < letters; ++l )
    {
      const bool bit = l & ( std::size_t{ 1 } << idx );
      if ( bit == neg )
      {
        sat[l] = false;
      }
    }
  }
  return sat;
}

} // namespace

omega_automaton parse_hoa( std::string_view text )
{
  omega_automaton a;
  std::optional<std::size_t> states;
  std::string acceptance;
  std::istringstream in{ std::string( text ) };
  std::string line;
  bool body = false;
  std::vector<std::vector<std::size_t>> marks;
  std::vector<std::vector<std::optional<std::uint32_t>>> edges;
  std::optional<std::uint32_t> current;

  while ( std::getline( in, line ) )
  {
    line = trim( line );
    if ( line.empty() )
    {
      continue;
    }
    if ( !body )
    {
      if ( line == "--BODY--" )
      {
        if ( !states )
        {
          throw hoa_error( "missing States header" );
        }
        body = true;
        marks.resize( *states );
        edges.assign( *states, std::vector<std::optional<std::uint32_t>>( a.letter_count() ) );
        continue;
      }
      const auto colon = line.find( ':' );
      if ( colon == std::string::npos )
      {
        throw hoa_error( "malformed header line '" + line + "'" );
      }
      const auto key = line.substr( 0, colon );
      const auto value = trim( line.substr( colon + 1 ) );
      if ( key == "States" )
      {
        states = std::stoul( value );
      }
      else if ( key == "Start" )
      {
        a.initial = static_cast<std::uint32_t>( std::stoul( value ) );
      }
      else if ( key == "AP" )
      {
        a.ap = split_quoted( value );
        if ( a.ap.size() != std::stoul( value ) )
        {
          throw hoa_error( "AP count does not match the listed names" );
        }
      }
      else if ( key == "Acceptance" )
      {
        acceptance = value;
      }
      continue;
    }
    if ( line == "--END--" )
    {
      break;
    }
    if ( line.rfind( "State:", 0 ) == 0 )
    {
      std::istringstream ls( line.substr( 6 ) );
      std::uint32_t q;
      ls >> q;
      if ( q >= *states )
      {
        throw hoa_error( "state index out of range" );
      }
      current = q;
      const auto brace = line.find( '{' );
      if ( brace != std::string::npos )
      {
        std::istringstream ms( line.substr( brace + 1, line.find( '}' ) - brace - 1 ) );
        std::size_t m;
        while ( ms >> m )
        {
          marks[q].push_back( m );
        }
      }
      continue;
    }
    if ( line[0] == '[' )
    {
      if ( !current )
      {
        throw hoa_error( "edge before any State line" );
      }
      const auto close = line.find( ']' );
      if ( close == std::string::npos )
      {
        throw hoa_error( "unterminated label" );
      }
      const auto sat = label_letters( line.substr( 1, close - 1 ), a.ap.size() );
      const auto target = static_cast<std::uint32_t>( std::stoul( trim( line.substr( close + 1 ) ) ) );
      for ( std::size_t l = 0; l < sat.size(); ++l )
      {
        if ( sat[l] )
        {
          auto& slot = edges[*current][l];
          if ( slot && *slot != target )
          {
            throw hoa_error( "automaton is not deterministic" );
          }
          slot = target;
        }
      }
      continue;
    }
    throw hoa_error( "unsupported body line '" + line + "'" );
  }
  if ( !body )
  {
    throw hoa_error( "missing --BODY--" );
  }

  const auto n = *states;
  a.labels.resize( n );
  a.delta.resize( n * a.letter_count() );
  for ( std::uint32_t q = 0; q < n; ++q )
  {
    a.labels[q] = std::to_string( q );
    for ( std::size_t l = 0; l < a.letter_count(); ++l )
    {
      if ( !edges[q][l] )
      {
        throw hoa_error( "automaton is not complete" );
      }
      a.delta[q * a.letter_count() + l] = *edges[q][l];
    }
  }

  std::istringstream as( acceptance );
  std::size_t sets = 0;
  as >> sets;
  std::string formula_text;
  std::getline( as, formula_text );
  formula_text = trim( formula_text );
  if ( formula_text == "Inf(0)" || formula_text == "Fin(0)" )
  {
    a.kind = formula_text == "Inf(0)" ? acceptance_kind::buchi : acceptance_kind::co_buchi;
    a.acc.assign( n, false );
    for ( std::uint32_t q = 0; q < n; ++q )
    {
      for ( auto m : marks[q] )
      {
        a.acc[q] = a.acc[q] || m == 0;
      }
    }
  }
  else if ( formula_text == "t" && sets == 0 )
  {
    a.kind = acceptance_kind::none;
  }
  else
  {
    if ( sets % 2 != 0 )
    {
      throw hoa_error( "unsupported acceptance '" + acceptance + "'" );
    }
    a.kind = acceptance_kind::rabin;
    a.pairs.assign( sets / 2, rabin_pair{ std::vector<bool>( n ), std::vector<bool>( n ) } );
    for ( std::uint32_t q = 0; q < n; ++q )
    {
      for ( auto m : marks[q] )
      {
        if ( m >= sets )
        {
          throw hoa_error( "acceptance mark out of range" );
        }
        ( m % 2 == 0 ? a.pairs[m / 2].fin : a.pairs[m / 2].inf )[q] = true;
      }
    }
  }
  return a;
}

} // namespace pltl
