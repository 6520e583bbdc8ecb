#include "../support/naive_eval.hpp"

#include <pltl/lasso.hpp>
#include <pltl/parser.hpp>
#include <pltl/past.hpp>
#include <pltl/random.hpp>

#include <doctest.h>

using namespace pltl;

TEST_SUITE( "lasso" )
{
  TEST_CASE( "lasso syntax" )
  {
    const auto w = parse_lasso( "{q},{p};{p}" );
    CHECK( w.prefix == finite_word{ { "q" }, { "p" } } );
    CHECK( w.period == finite_word{ { "p" } } );
    CHECK( parse_lasso( to_string( w ) ) == w );
    const auto v = parse_lasso( " ; {p, q}, {}" );
    CHECK( v.prefix.empty() );
    CHECK( v.period.size() == 2 );
    CHECK( v.at( 2 ) == letter{ "p", "q" } );
    CHECK( v.at( 3 ).empty() );
    CHECK_THROWS_AS( (void)parse_lasso( "{p};" ), std::invalid_argument );
    CHECK_THROWS_AS( (void)parse_lasso( "{p}" ), std::invalid_argument );
  }

  TEST_CASE( "suffixes" )
  {
    const auto w = parse_lasso( "{q},{p};{p},{}" );
    CHECK( suffix( w, 1 ) == parse_lasso( "{p};{p},{}" ) );
    CHECK( suffix( w, 3 ) == parse_lasso( ";{},{p}" ) );
    CHECK( w.slice( 1, 4 ) == finite_word{ { "p" }, { "p" }, {} } );
    const auto f = parse( "p U X q" );
    for ( std::size_t t = 0; t < 8; ++t )
    {
      CHECK( holds( f, suffix( w, t ), 0 ) == holds( f, w, t ) );
    }
  }

  TEST_CASE( "periodic bit sequences" )
  {
    periodic_bits b{ 1, 4, { true, true, false, true, false } };
    const auto c = b.canonical();
    CHECK( c.threshold == 1 );
    CHECK( c.period == 2 );
    for ( std::size_t t = 0; t < 12; ++t )
    {
      CHECK( b.value( t ) == c.value( t ) );
    }
  }

  TEST_CASE( "evaluation examples" )
  {
    CHECK( !holds( parse( "Y p" ), parse_lasso( ";{p}" ), 0 ) );
    CHECK( holds( parse( "p S q" ), parse_lasso( "{q},{p};{p}" ), 1 ) );
    const auto g = parse( "G p" );
    for ( std::size_t t = 0; t < 6; ++t )
    {
      CHECK( holds( g, parse_lasso( ";{p}" ), t ) );
      CHECK( !holds( g, parse_lasso( ";{p},{}" ), t ) );
      CHECK( holds( tt(), parse_lasso( "{};{q}" ), t ) );
    }
    CHECK( holds( parse( "wY ff" ), parse_lasso( ";{}" ), 0 ) );
    const auto w = parse_lasso( ";{q},{p,q}" );
    const auto x = parse( "X (p S X q)" );
    CHECK( holds( x, w, 0 ) == testing::naive_holds( x, w, 0 ) );
    const auto edge = parse_lasso( "{p,q,r},{p,q},{p,q},{} ; {p,q}" );
    CHECK( holds( parse( "X p W r" ), edge, 5 ) );
    CHECK( testing::naive_holds( parse( "X p W r" ), edge, 5 ) );
  }

  TEST_CASE( "evaluator agrees with the unrolled oracle" )
  {
    generator gen( 31 );
    formula_limits limits;
    limits.max_size = 7;
    limits.max_psf = 3;
    const auto ap = default_ap( 3 );
    for ( int i = 0; i < 300; ++i )
    {
      const auto f = gen.random_formula( limits );
      const auto w = gen.random_lasso( ap );
      testing::naive_evaluator naive( w, testing::naive_evaluator::default_horizon( f, w, 10 ) );
      evaluator ev( w );
      for ( std::size_t t = 0; t <= 10; ++t )
      {
        CAPTURE( to_string( f ) );
        CAPTURE( to_string( w ) );
        CHECK( ev.holds( f, t ) == naive.holds( f, t ) );
      }
    }
  }

  TEST_CASE( "entailed sets" )
  {
    const auto p = prop( "p" ), q = prop( "q" );
    const auto phi = make_and( yesterday( p ), weak_since( p, q ) );
    const auto w = parse_lasso( "{q};{p}" );
    CHECK( entailed_set( phi, w, 0 ) == formula_set{ weak_since( p, q ) } );
    CHECK( composed_entailed( phi, w, 0 ) == formula_set{ weak_since( p, q ) } );
    const auto x = next( since( p, q ) );
    CHECK( entailed_set( x, w, 1 ).count( since( p, q ) ) == 1 );
    CHECK( entailed_set( parse( "p U q" ), w, 3 ).empty() );

    const entailment_trace trace( phi, w );
    for ( std::size_t t = 0; t < 10; ++t )
    {
      CHECK( trace.entailed( t ) == entailed_set( phi, w, t ) );
      CHECK( trace.composed( t ) == composed_entailed( phi, w, t ) );
      CHECK( trace.entailed_sequence( t ).size() == t + 1 );
    }
  }

  TEST_CASE( "rewriting under the composed entailed set preserves truth" )
  {
    generator gen( 32 );
    formula_limits limits;
    const auto ap = default_ap( 3 );
    for ( int i = 0; i < 300; ++i )
    {
      const auto f = gen.random_formula( limits );
      const auto w = gen.random_lasso( ap );
      const auto t = gen.uniform( 0, 6 );
      CHECK( holds( f, w, t ) == holds( rewrite_under( f, composed_entailed( f, w, t ) ), suffix( w, t ), 0 ) );
    }
  }

  TEST_CASE( "limit sets" )
  {
    const auto until_pq = parse( "p U q" );
    for ( std::size_t t = 0; t < 4; ++t )
    {
      const auto s = compute_limit_sets( until_pq, parse_lasso( ";{q}" ), t );
      CHECK( s.f == formula_set{ until_pq } );
      CHECK( s.gf == formula_set{ until_pq } );
      CHECK( s.g.empty() );
    }
    const auto none = compute_limit_sets( parse( "p & Y q" ), parse_lasso( ";{q}" ), 0 );
    CHECK( ( none.f.empty() && none.gf.empty() && none.g.empty() && none.fg.empty() ) );

    generator gen( 33 );
    formula_limits limits;
    const auto ap = default_ap( 3 );
    for ( int i = 0; i < 100; ++i )
    {
      const auto f = gen.random_formula( limits );
      const auto w = gen.random_lasso( ap );
      const auto s = compute_limit_sets( f, w, gen.uniform( 0, 5 ) );
      for ( const auto& x : s.gf )
      {
        CHECK( s.f.count( x ) == 1 );
      }
      for ( const auto& x : s.g )
      {
        CHECK( s.fg.count( x ) == 1 );
      }
    }
  }

  TEST_CASE( "stability index" )
  {
    CHECK( stability_index( parse( "p & Y q" ), parse_lasso( "{p};{q}" ) ) == 0 );
    CHECK( stability_index( parse( "p U q" ), parse_lasso( "{p},{p},{p};{q}" ) ) == 0 );
    CHECK( stability_index( parse( "F p" ), parse_lasso( "{p};{}" ) ) == 1 );
  }

  TEST_CASE( "decomposition premises agree with evaluation" )
  {
    const auto g = check_master( parse( "G p" ), parse_lasso( ";{p}" ) );
    CHECK( g.holds );
    CHECK( g.consistent() );
    const auto f = check_master( parse( "F p" ), parse_lasso( ";{}" ) );
    CHECK( !f.holds );
    CHECK( !f.premises_satisfiable );
    const auto intro = check_master( parse( "G (p <-> (O q & O r))" ), parse_lasso( "{};{q,r,p}" ) );
    CHECK( intro.holds );
    CHECK( intro.consistent() );
  }
}
