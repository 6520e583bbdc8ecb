#include "../support/naive_eval.hpp"

#include <pltl/formula.hpp>
#include <pltl/lasso.hpp>
#include <pltl/parser.hpp>
#include <pltl/random.hpp>

#include <doctest.h>

using namespace pltl;

TEST_SUITE( "formula" )
{
  TEST_CASE( "hash-consing gives identity on structure" )
  {
    CHECK( until( prop( "p" ), prop( "q" ) ) == until( prop( "p" ), prop( "q" ) ) );
    CHECK( until( prop( "p" ), prop( "q" ) ) != until( prop( "q" ), prop( "p" ) ) );
    CHECK( prop( "p" ) != neg_prop( "p" ) );
    CHECK( eventually( prop( "p" ) ) == until( tt(), prop( "p" ) ) );
    CHECK( globally( prop( "p" ) ) == weak_until( prop( "p" ), ff() ) );
    CHECK( once( prop( "p" ) ) == since( tt(), prop( "p" ) ) );
    CHECK( historically( prop( "p" ) ) == weak_since( prop( "p" ), ff() ) );
  }

  TEST_CASE( "builders reject malformed nodes" )
  {
    CHECK_THROWS_AS( (void)make_unary( op::until, prop( "p" ) ), std::invalid_argument );
    CHECK_THROWS_AS( (void)make_binary( op::next, prop( "p" ), prop( "q" ) ), std::invalid_argument );
    CHECK_THROWS( (void)next( formula{} ) );
  }

  TEST_CASE( "dual_negate swaps each operator with its dual" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    CHECK( dual_negate( tt() ) == ff() );
    CHECK( dual_negate( p ) == neg_prop( "p" ) );
    CHECK( dual_negate( yesterday( p ) ) == weak_yesterday( neg_prop( "p" ) ) );
    CHECK( dual_negate( since( p, q ) ) == weak_back( neg_prop( "p" ), neg_prop( "q" ) ) );
    CHECK( dual_negate( weak_since( p, q ) ) == back( neg_prop( "p" ), neg_prop( "q" ) ) );
    CHECK( dual_negate( until( p, q ) ) == release( neg_prop( "p" ), neg_prop( "q" ) ) );
    CHECK( dual_negate( weak_until( p, q ) ) == strong_release( neg_prop( "p" ), neg_prop( "q" ) ) );
    CHECK( dual_negate( next( p ) ) == next( neg_prop( "p" ) ) );
    CHECK( dual_negate( make_and( p, q ) ) == make_or( neg_prop( "p" ), neg_prop( "q" ) ) );
  }

  TEST_CASE( "subformula sets" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    CHECK( sff( make_and( p, next( q ) ) ) == formula_set{ p, next( q ), q } );
    CHECK( sff( tt() ).empty() );
    const auto inner = since( p, next( q ) );
    const auto phi = next( inner );
    CHECK( sff( phi ) == formula_set{ phi, inner, p, next( q ), q } );
    CHECK( psf( phi ) == formula_set{ inner } );
    CHECK( psf( until( p, q ) ).empty() );
    const auto ws = weak_since( p, q );
    CHECK( psf( yesterday( ws ) ) == formula_set{ yesterday( ws ), ws } );
    CHECK( mu_set( until( p, q ) ) == formula_set{ until( p, q ) } );
    CHECK( nu_set( until( p, q ) ).empty() );
    CHECK( nu_set( globally( p ) ) == formula_set{ globally( p ) } );
  }

  TEST_CASE( "mu and nu sets of the intro formula contain no past nodes" )
  {
    const auto phi = parse( "G (p <-> (O q & O r))" );
    for ( const auto& s : { mu_set( phi ), nu_set( phi ) } )
    {
      for ( const auto& f : s )
      {
        CHECK( !f.is_past() );
        CHECK( ( f.kind() == op::until || f.kind() == op::strong_release || f.kind() == op::weak_until ||
                 f.kind() == op::release ) );
      }
    }
    CHECK( nu_set( phi ).size() == 1 );
    CHECK( mu_set( phi ).empty() );
  }

  TEST_CASE( "size counts future, propositional and past nodes" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    CHECK( size( p ) == size_metrics{ 1, 0 } );
    CHECK( size( yesterday( p ) ) == size_metrics{ 1, 1 } );
    CHECK( size( next( since( p, next( q ) ) ) ) == size_metrics{ 4, 1 } );
    CHECK( size( make_and( p, tt() ) ) == size_metrics{ 1, 0 } );
  }

  TEST_CASE( "fragments" )
  {
    CHECK( in_mu_fragment( parse( "F (p S q)" ) ) );
    CHECK( !in_mu_fragment( parse( "G p" ) ) );
    CHECK( in_nu_fragment( parse( "G X p" ) ) );
    CHECK( !in_nu_fragment( parse( "p M q" ) ) );
  }

  TEST_CASE( "random formulas: round trip, involution, negation, containments" )
  {
    generator gen( 2024 );
    formula_limits limits;
    limits.max_size = 7;
    limits.max_psf = 3;
    const auto ap = default_ap( 3 );
    for ( int i = 0; i < 300; ++i )
    {
      const auto f = gen.random_formula( limits );
      CAPTURE( to_string( f ) );
      CHECK( parse( to_string( f ) ) == f );
      CHECK( dual_negate( dual_negate( f ) ) == f );
      const auto w = gen.random_lasso( ap );
      const auto neg = dual_negate( f );
      for ( std::size_t t = 0; t <= 8; ++t )
      {
        CHECK( holds( f, w, t ) != holds( neg, w, t ) );
      }
      const auto all = sff( f );
      for ( const auto& s : { psf( f ), mu_set( f ), nu_set( f ) } )
      {
        for ( const auto& g : s )
        {
          CHECK( all.count( g ) == 1 );
        }
      }
    }
  }

  TEST_CASE( "negation identities hold semantically" )
  {
    generator gen( 5 );
    const auto ap = default_ap( 2 );
    const auto p = prop( "p" ), q = prop( "q" );
    for ( int i = 0; i < 200; ++i )
    {
      const auto w = gen.random_lasso( ap, { 3, 3 } );
      for ( std::size_t t = 0; t <= 8; ++t )
      {
        CHECK( testing::naive_holds( release( neg_prop( "p" ), neg_prop( "q" ) ), w, t ) != holds( until( p, q ), w, t ) );
        CHECK( testing::naive_holds( weak_yesterday( neg_prop( "p" ) ), w, t ) != holds( yesterday( p ), w, t ) );
        CHECK( testing::naive_holds( weak_back( neg_prop( "p" ), neg_prop( "q" ) ), w, t ) != holds( since( p, q ), w, t ) );
      }
    }
  }
}
