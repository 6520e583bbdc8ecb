#include <pltl/parser.hpp>

#include <cctype>
#include <vector>

namespace pltl
{

namespace
{

enum class tok
{
  ident,
  tt,
  ff,
  prefix,
  infix,
  and_,
  or_,
  implies,
  iff,
  lparen,
  rparen,
  end
};

struct token
{
  tok kind;
  std::string text;
  std::size_t pos;
};

bool is_ident_char( char c )
{
  return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_';
}

std::vector<token> lex( std::string_view s )
{
  std::vector<token> out;
  std::size_t i = 0;
  while ( i < s.size() )
  {
    const char c = s[i];
    if ( std::isspace( static_cast<unsigned char>( c ) ) )
    {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if ( c == '(' || c == ')' )
    {
      out.push_back( { c == '(' ? tok::lparen : tok::rparen, std::string( 1, c ), start } );
      ++i;
    }
    else if ( c == '!' )
    {
      out.push_back( { tok::prefix, "!", start } );
      ++i;
    }
    else if ( c == '&' )
    {
      i += ( i + 1 < s.size() && s[i + 1] == '&' ) ? 2 : 1;
      out.push_back( { tok::and_, "&", start } );
    }
    else if ( c == '|' )
    {
      i += ( i + 1 < s.size() && s[i + 1] == '|' ) ? 2 : 1;
      out.push_back( { tok::or_, "|", start } );
    }
    else if ( s.substr( i, 2 ) == "->" )
    {
      out.push_back( { tok::implies, "->", start } );
      i += 2;
    }
    else if ( s.substr( i, 3 ) == "<->" )
    {
      out.push_back( { tok::iff, "<->", start } );
      i += 3;
    }
    else if ( std::isupper( static_cast<unsigned char>( c ) ) )
    {
      const std::string t( 1, c );
      static const std::string prefixes = "XYFGOH";
      static const std::string infixes = "UWRMSB";
      if ( prefixes.find( c ) != std::string::npos )
      {
        out.push_back( { tok::prefix, t, start } );
      }
      else if ( infixes.find( c ) != std::string::npos )
      {
        out.push_back( { tok::infix, t, start } );
      }
      else
      {
        throw parse_error( "unknown operator '" + t + "'", start );
      }
      ++i;
    }
    else if ( std::islower( static_cast<unsigned char>( c ) ) )
    {
      while ( i < s.size() && is_ident_char( s[i] ) )
      {
        ++i;
      }
      std::string t( s.substr( start, i - start ) );
      if ( t == "tt" )
      {
        out.push_back( { tok::tt, t, start } );
      }
      else if ( t == "ff" )
      {
        out.push_back( { tok::ff, t, start } );
      }
      else if ( t == "wY" )
      {
        out.push_back( { tok::prefix, t, start } );
      }
      else if ( t == "wS" || t == "wB" )
      {
        out.push_back( { tok::infix, t, start } );
      }
      else
      {
        out.push_back( { tok::ident, t, start } );
      }
    }
    else
    {
      throw parse_error( std::string( "unexpected character '" ) + c + "'", start );
    }
  }
  out.push_back( { tok::end, "", s.size() } );
  return out;
}

class parser
{
public:
  explicit parser( std::vector<token> tokens ) : _tokens( std::move( tokens ) ) {}

  formula run()
  {
    auto f = parse_iff();
    if ( peek().kind != tok::end )
    {
      throw parse_error( "unexpected '" + peek().text + "'", peek().pos );
    }
    return f;
  }

private:
  const token& peek() const { return _tokens[_pos]; }
  const token& take() { return _tokens[_pos++]; }

  formula parse_iff()
  {
    auto lhs = parse_implies();
    while ( peek().kind == tok::iff )
    {
      take();
      auto rhs = parse_implies();
      lhs = make_and( make_or( dual_negate( lhs ), rhs ), make_or( dual_negate( rhs ), lhs ) );
    }
    return lhs;
  }

  formula parse_implies()
  {
    auto lhs = parse_or();
    if ( peek().kind == tok::implies )
    {
      take();
      auto rhs = parse_implies();
      return make_or( dual_negate( lhs ), rhs );
    }
    return lhs;
  }

  formula parse_or()
  {
    auto lhs = parse_and();
    while ( peek().kind == tok::or_ )
    {
      take();
      lhs = make_or( lhs, parse_and() );
    }
    return lhs;
  }

  formula parse_and()
  {
    auto lhs = parse_binary();
    while ( peek().kind == tok::and_ )
    {
      take();
      lhs = make_and( lhs, parse_binary() );
    }
    return lhs;
  }

  formula parse_binary()
  {
    auto lhs = parse_unary();
    if ( peek().kind != tok::infix )
    {
      return lhs;
    }
    const auto name = take().text;
    auto rhs = parse_binary();
    if ( name == "U" ) return until( lhs, rhs );
    if ( name == "W" ) return weak_until( lhs, rhs );
    if ( name == "R" ) return release( lhs, rhs );
    if ( name == "M" ) return strong_release( lhs, rhs );
    if ( name == "S" ) return since( lhs, rhs );
    if ( name == "wS" ) return weak_since( lhs, rhs );
    if ( name == "B" ) return back( lhs, rhs );
    return weak_back( lhs, rhs );
  }

  formula parse_unary()
  {
    if ( peek().kind != tok::prefix )
    {
      return parse_atom();
    }
    const auto name = take().text;
    auto operand = parse_unary();
    if ( name == "!" ) return dual_negate( operand );
    if ( name == "X" ) return next( operand );
    if ( name == "Y" ) return yesterday( operand );
    if ( name == "wY" ) return weak_yesterday( operand );
    if ( name == "F" ) return eventually( operand );
    if ( name == "G" ) return globally( operand );
    if ( name == "O" ) return once( operand );
    return historically( operand );
  }

  formula parse_atom()
  {
    const auto& t = take();
    switch ( t.kind )
    {
    case tok::tt: return tt();
    case tok::ff: return ff();
    case tok::ident: return prop( t.text );
    case tok::lparen:
    {
      auto f = parse_iff();
      if ( peek().kind != tok::rparen )
      {
        throw parse_error( "expected ')'", peek().pos );
      }
      take();
      return f;
    }
    case tok::end: throw parse_error( "unexpected end of input", t.pos );
    default: throw parse_error( "unexpected '" + t.text + "'", t.pos );
    }
  }

  std::vector<token> _tokens;
  std::size_t _pos = 0;
};

} // namespace

formula parse( std::string_view text )
{
  return parser( lex( text ) ).run();
}

} // namespace pltl
