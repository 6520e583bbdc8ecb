#include <pltl/selftest.hpp>

#include <pltl/after.hpp>
#include <pltl/corpus.hpp>
#include <pltl/lasso.hpp>
#include <pltl/parser.hpp>
#include <pltl/past.hpp>
#include <pltl/random.hpp>
#include <pltl/translation.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

namespace pltl
{

namespace
{

constexpr std::size_t max_reported_failures = 5;

suite_result timed( std::string name, std::size_t count, const std::function<std::string( std::size_t )>& check )
{
  suite_result r;
  r.name = std::move( name );
  const auto start = std::chrono::steady_clock::now();
  for ( std::size_t i = 0; i < count; ++i )
  {
    auto failure = check( i );
    ++r.total;
    if ( failure.empty() )
    {
      ++r.passed;
    }
    else if ( r.failures.size() < max_reported_failures )
    {
      r.failures.push_back( std::move( failure ) );
    }
  }
  r.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  return r;
}

std::string describe( formula f, const lasso_word& w )
{
  return to_string( f ) + " on " + to_string( w );
}

} // namespace

suite_result run_after_suite( std::uint64_t seed, std::size_t count )
{
  generator gen( seed );
  const formula_limits limits;
  const auto ap = default_ap( limits.ap_count );
  return timed( "theorem1", count, [&]( std::size_t ) -> std::string {
    const auto f = gen.random_formula( limits );
    const auto w = gen.random_lasso( ap );
    const auto t = gen.uniform( 0, 8 );
    const auto rest = af_ext( f, w.slice( 0, t ) );
    if ( holds( f, w, 0 ) == holds( rest, suffix( w, t ), 0 ) )
    {
      return {};
    }
    return describe( f, w ) + " at t=" + std::to_string( t );
  } );
}

suite_result run_entailment_suite( std::uint64_t seed, std::size_t count )
{
  generator gen( seed );
  const formula_limits limits;
  const auto ap = default_ap( limits.ap_count );
  return timed( "lemma2", count, [&]( std::size_t ) -> std::string {
    const auto f = gen.random_formula( limits );
    const auto w = gen.random_lasso( ap );
    const auto t = gen.uniform( 0, 8 );
    const auto rewritten = rewrite_under( f, composed_entailed( f, w, t ) );
    if ( holds( f, w, t ) == holds( rewritten, suffix( w, t ), 0 ) )
    {
      return {};
    }
    return describe( f, w ) + " at t=" + std::to_string( t );
  } );
}

suite_result run_master_suite( std::uint64_t seed, std::size_t count )
{
  generator gen( seed );
  formula_limits limits;
  limits.max_mu_nu = 3;
  const auto ap = default_ap( limits.ap_count );
  return timed( "master", count, [&]( std::size_t ) -> std::string {
    const auto f = gen.random_formula( limits );
    const auto w = gen.random_lasso( ap );
    const auto report = check_master( f, w );
    if ( report.consistent() )
    {
      return {};
    }
    return describe( f, w ) + ( report.holds ? " holds but no premises" : " premises without holding" );
  } );
}

suite_result run_translation_suite( std::uint64_t seed, std::size_t words_per_formula, std::size_t max_states )
{
  generator gen( seed );
  const auto& entries = corpus();
  return timed( "e2e", entries.size(), [&]( std::size_t i ) -> std::string {
    const auto f = parse( entries[i].text );
    auto ap = default_ap( 3 );
    for ( const auto& v : variables( f ) )
    {
      if ( std::find( ap.begin(), ap.end(), v ) == ap.end() )
      {
        ap.push_back( v );
      }
    }
    translation_result result;
    try
    {
      result = translate( f, ap, max_states );
    }
    catch ( const resource_limit_error& e )
    {
      return entries[i].name + ": " + e.what();
    }
    for ( std::size_t k = 0; k < words_per_formula; ++k )
    {
      const auto w = gen.random_lasso( ap );
      if ( accepts( result.automaton, w ) != holds( f, w, 0 ) )
      {
        return entries[i].name + ": " + describe( f, w );
      }
    }
    return {};
  } );
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names = { "theorem1", "lemma2", "master", "e2e" };
  return names;
}

suite_result run_suite( const std::string& name, std::uint64_t seed, std::size_t count )
{
  if ( name == "theorem1" )
  {
    return run_after_suite( seed, count );
  }
  if ( name == "lemma2" )
  {
    return run_entailment_suite( seed, count );
  }
  if ( name == "master" )
  {
    return run_master_suite( seed, count );
  }
  if ( name == "e2e" )
  {
    return run_translation_suite( seed, count );
  }
  throw std::invalid_argument( "unknown suite '" + name + "'" );
}

} // namespace pltl
