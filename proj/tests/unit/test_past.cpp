#include <pltl/formula.hpp>
#include <pltl/lasso.hpp>
#include <pltl/parser.hpp>
#include <pltl/past.hpp>
#include <pltl/random.hpp>

#include <doctest.h>

#include <algorithm>

using namespace pltl;

TEST_SUITE( "past" )
{
  TEST_CASE( "weaken and strengthen" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    CHECK( weaken( yesterday( p ) ) == weak_yesterday( p ) );
    CHECK( weaken( since( p, q ) ) == weak_since( p, q ) );
    CHECK( weaken( back( p, q ) ) == weak_back( p, q ) );
    CHECK( weaken( until( p, q ) ) == until( p, q ) );
    CHECK( strengthen( weaken( since( p, q ) ) ) == since( p, q ) );
    CHECK( strengthen( weak_back( p, q ) ) == back( p, q ) );
    CHECK( is_weak( weak_yesterday( p ) ) );
    CHECK( !is_weak( yesterday( p ) ) );
  }

  TEST_CASE( "rewrite under a set" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    const auto phi = yesterday( weak_since( p, q ) );
    CHECK( rewrite_under( phi, { phi } ) == weak_yesterday( since( p, q ) ) );
    CHECK( rewrite_under( phi, { weak_since( p, q ) } ) == phi );
    CHECK( rewrite_under( make_and( p, q ), { phi } ) == make_and( p, q ) );
    CHECK( rewrite_set( { phi, weak_since( p, q ) }, { phi } ) ==
           formula_set{ weak_yesterday( since( p, q ) ), since( p, q ) } );
  }

  TEST_CASE( "weakening conditions" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    CHECK( wc( since( p, q ) ) == q );
    CHECK( wc( weak_since( p, q ) ) == make_or( p, q ) );
    CHECK( wc( yesterday( p ) ) == p );
    CHECK( wc( weak_yesterday( p ) ) == p );
    CHECK( wc( back( p, q ) ) == make_and( p, q ) );
    CHECK( wc( weak_back( p, q ) ) == q );
    CHECK_THROWS_AS( (void)wc( until( p, q ) ), std::invalid_argument );
  }

  TEST_CASE( "the strong reading implies the weak one" )
  {
    generator gen( 3 );
    formula_limits limits;
    limits.max_size = 5;
    limits.operators = { op::yesterday, op::weak_yesterday, op::since, op::weak_since, op::back, op::weak_back };
    const auto ap = default_ap( 3 );
    int checked = 0;
    while ( checked < 300 )
    {
      const auto f = gen.random_formula( limits );
      if ( !f.is_past() )
      {
        continue;
      }
      ++checked;
      const auto w = gen.random_lasso( ap );
      for ( std::size_t t = 0; t <= 6; ++t )
      {
        CHECK( ( !holds( strengthen( f ), w, t ) || holds( weaken( f ), w, t ) ) );
      }
    }
  }

  TEST_CASE( "enumeration order of past sets" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    CHECK( enumerate_past_sets( until( p, q ) ) == std::vector<formula_set>{ {} } );
    CHECK( enumerate_past_sets( yesterday( p ) ) == std::vector<formula_set>{ {}, { yesterday( p ) } } );
    CHECK( enumerate_past_sets( weak_yesterday( p ) ) == std::vector<formula_set>{ { weak_yesterday( p ) }, {} } );
    const auto sets = enumerate_past_sets( parse( "X (p S X q) & (q wS p)" ) );
    CHECK( sets.size() == 4 );
    CHECK( sets.front() == formula_set{ weak_since( q, p ) } );
  }

  TEST_CASE( "saturation" )
  {
    const auto p = prop( "p" );
    const auto phi = make_and( yesterday( p ), weak_yesterday( p ) );
    CHECK( !is_saturated( {}, { yesterday( p ) }, phi ) );
    CHECK( is_saturated( {}, { yesterday( p ), weak_yesterday( p ) }, phi ) );
    for ( const auto& c : enumerate_past_sets( phi ) )
    {
      CHECK( is_saturated( c, c, phi ) );
    }
  }

  TEST_CASE( "rewrite indices" )
  {
    const auto p = prop( "p" );
    const std::vector<formula_set> single{ {} };
    CHECK( rewrite_indices_for( until( p, p ), single, 0 ) == std::vector<std::size_t>{ 0 } );

    const auto phi = make_and( yesterday( p ), weak_yesterday( p ) );
    const auto sets = enumerate_past_sets( phi );
    const auto index_of = [&]( const formula_set& c ) {
      return static_cast<std::size_t>( std::find( sets.begin(), sets.end(), c ) - sets.begin() );
    };
    const auto j = rewrite_indices_for( phi, sets, index_of( { yesterday( p ) } ) );
    CHECK( std::find( j.begin(), j.end(), index_of( {} ) ) == j.end() );
    for ( std::size_t i = 0; i < sets.size(); ++i )
    {
      const auto ji = rewrite_indices_for( phi, sets, i );
      CHECK( std::find( ji.begin(), ji.end(), i ) != ji.end() );
    }
  }

  TEST_CASE( "compose_sequence" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    const auto phi = yesterday( weak_since( p, q ) );
    const formula_set c{ phi };
    formula_set weak_rooted;
    for ( const auto& psi : psf( phi ) )
    {
      if ( is_weak( rewrite_under( psi, c ) ) )
      {
        weak_rooted.insert( psi );
      }
    }
    CHECK( compose_sequence( phi, { c } ) == weak_rooted );
    CHECK_THROWS_AS( (void)compose_sequence( phi, {} ), std::invalid_argument );

    const auto sets = enumerate_past_sets( phi );
    for ( const auto& a : sets )
    {
      for ( const auto& b : sets )
      {
        const auto composed = compose_sequence( phi, { a, b } );
        CHECK( rewrite_under( phi, composed ) == rewrite_under( rewrite_under( phi, a ), b ) );
      }
    }
  }
}
