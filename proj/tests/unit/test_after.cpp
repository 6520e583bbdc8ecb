#include <pltl/after.hpp>
#include <pltl/lasso.hpp>
#include <pltl/parser.hpp>
#include <pltl/past.hpp>
#include <pltl/prop_logic.hpp>
#include <pltl/random.hpp>

#include <doctest.h>

using namespace pltl;

namespace
{

bool equivalent( formula a, formula b )
{
  prop_context ctx;
  return ctx.prop_equiv( a, b );
}

} // namespace

TEST_SUITE( "after" )
{
  TEST_CASE( "local after-function cases" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    CHECK( af_loc( p, { "p" }, {} ) == tt() );
    CHECK( af_loc( p, {}, {} ) == ff() );
    CHECK( af_loc( yesterday( p ), { "p" }, { yesterday( p ) } ) == ff() );
    CHECK( af_loc( weak_yesterday( p ), {}, {} ) == tt() );
    CHECK( equivalent( af_loc( since( p, q ), { "q" }, {} ), tt() ) );
    CHECK( equivalent( af_loc( since( p, q ), { "p" }, {} ), ff() ) );
  }

  TEST_CASE( "past update" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    CHECK( pu_loc( q, { "p" }, {} ) == q );
    const auto s = since( p, next( q ) );
    CHECK( equivalent( pu_loc( s, {}, { s } ), make_and( weak_since( p, next( q ) ), q ) ) );
    const auto phi = parse( "X (p S q) U (r wS p)" );
    CHECK( pu_loc( phi, { "q" }, {} ) == rewrite_under( phi, {} ) );
  }

  TEST_CASE( "extended local after-function folds letter by letter" )
  {
    const auto phi = parse( "X (p S X q) | (q U Y r)" );
    const auto sets = enumerate_past_sets( phi );
    CHECK( af_loc_ext( phi, {}, { sets[0] } ) == phi );
    const finite_word w{ { "p" }, { "q", "r" } };
    CHECK( af_loc_ext( phi, { w[0] }, { sets[0], sets[1] } ) == af_loc( phi, w[0], sets[1] ) );
    CHECK( af_loc_ext( phi, w, { sets[0], sets[1], sets[2] } ) ==
           af_loc( af_loc( phi, w[0], sets[1] ), w[1], sets[2] ) );
    CHECK_THROWS_AS( (void)af_loc_ext( phi, w, { sets[0] } ), std::invalid_argument );
  }

  TEST_CASE( "global after-function examples" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    const auto inner = since( p, next( q ) );
    CHECK( equivalent( af( next( inner ), { "p" } ),
                       make_or( make_and( weak_since( p, next( q ) ), q ), inner ) ) );
    CHECK( af( tt(), { "p" } ) == tt() );
    CHECK( equivalent( af( globally( p ), { "p" } ), globally( p ) ) );
    CHECK( equivalent( af( globally( p ), {} ), ff() ) );
    CHECK( af_ext( inner, {} ) == inner );
    CHECK( equivalent( af_ext( p, { { "p" } } ), tt() ) );
    CHECK( equivalent( af_ext( next( next( p ) ), { { "q" }, {} } ), p ) );
  }

  TEST_CASE( "after-function distributes over disjunction" )
  {
    generator gen( 21 );
    formula_limits limits;
    limits.max_size = 5;
    const auto ap = default_ap( 3 );
    for ( int i = 0; i < 200; ++i )
    {
      const auto a = gen.random_formula( limits );
      const auto b = gen.random_formula( limits );
      const auto sigma = gen.random_letter( ap );
      CAPTURE( to_string( a ) );
      CAPTURE( to_string( b ) );
      CHECK( equivalent( af( make_or( a, b ), sigma ), make_or( af( a, sigma ), af( b, sigma ) ) ) );
    }
  }

  TEST_CASE( "engine agrees with the formula-level after-function" )
  {
    generator gen( 22 );
    formula_limits limits;
    limits.max_size = 7;
    limits.max_psf = 3;
    const auto ap = default_ap( 3 );
    for ( int i = 0; i < 200; ++i )
    {
      const auto f = gen.random_formula( limits );
      const auto sigma = gen.random_letter( ap );
      prop_context ctx;
      after_engine engine( ctx );
      const auto direct = engine.af( ctx.canonicalize( f ), sigma );
      CHECK( direct == ctx.canonicalize( af( f, sigma ) ) );
      CHECK( engine.af( ctx.canonicalize( f ), sigma ) == direct );
    }
  }

  TEST_CASE( "residual formula is correct on random words" )
  {
    generator gen( 23 );
    formula_limits limits;
    const auto ap = default_ap( 3 );
    for ( int i = 0; i < 300; ++i )
    {
      const auto f = gen.random_formula( limits );
      const auto w = gen.random_lasso( ap );
      const auto t = gen.uniform( 0, 6 );
      CAPTURE( to_string( f ) );
      CAPTURE( to_string( w ) );
      CHECK( holds( f, w, 0 ) == holds( af_ext( f, w.slice( 0, t ) ), suffix( w, t ), 0 ) );
    }
  }
}
