#include <pltl/after.hpp>
#include <pltl/corpus.hpp>
#include <pltl/lasso.hpp>
#include <pltl/parser.hpp>
#include <pltl/random.hpp>
#include <pltl/translation.hpp>

#include <benchmark/benchmark.h>

#include <algorithm>

namespace
{

void translate_corpus_entry( benchmark::State& state )
{
  const auto& entry = pltl::corpus().at( static_cast<std::size_t>( state.range( 0 ) ) );
  const auto f = pltl::parse( entry.text );
  state.SetLabel( entry.name );
  std::size_t states = 0;
  for ( auto _ : state )
  {
    const auto r = pltl::translate( f, pltl::default_ap( 3 ) );
    states = r.stats.states;
    benchmark::DoNotOptimize( states );
  }
  state.counters["states"] = static_cast<double>( states );
}

void translate_whole_corpus( benchmark::State& state )
{
  std::vector<pltl::formula> formulas;
  for ( const auto& e : pltl::corpus() )
  {
    formulas.push_back( pltl::parse( e.text ) );
  }
  for ( auto _ : state )
  {
    for ( const auto f : formulas )
    {
      auto ap = pltl::default_ap( 3 );
      for ( const auto& v : pltl::variables( f ) )
      {
        if ( std::find( ap.begin(), ap.end(), v ) == ap.end() )
        {
          ap.push_back( v );
        }
      }
      benchmark::DoNotOptimize( pltl::translate( f, ap ).stats.states );
    }
  }
}

void after_function_random( benchmark::State& state )
{
  pltl::generator gen( 1 );
  pltl::formula_limits limits;
  limits.max_size = static_cast<std::size_t>( state.range( 0 ) );
  limits.max_psf = 3;
  const auto ap = pltl::default_ap( 3 );
  std::vector<std::pair<pltl::formula, pltl::lasso_word>> cases;
  for ( int i = 0; i < 64; ++i )
  {
    cases.emplace_back( gen.random_formula( limits ), gen.random_lasso( ap ) );
  }
  for ( auto _ : state )
  {
    for ( const auto& [f, w] : cases )
    {
      benchmark::DoNotOptimize( pltl::af_ext( f, w.slice( 0, 6 ) ) );
    }
  }
}

void evaluate_random( benchmark::State& state )
{
  pltl::generator gen( 2 );
  pltl::formula_limits limits;
  limits.max_size = 10;
  limits.max_psf = 4;
  const auto ap = pltl::default_ap( 3 );
  std::vector<std::pair<pltl::formula, pltl::lasso_word>> cases;
  for ( int i = 0; i < 64; ++i )
  {
    cases.emplace_back( gen.random_formula( limits ), gen.random_lasso( ap ) );
  }
  for ( auto _ : state )
  {
    for ( const auto& [f, w] : cases )
    {
      benchmark::DoNotOptimize( pltl::holds( f, w, 3 ) );
    }
  }
}

} // namespace

BENCHMARK( translate_corpus_entry )->DenseRange( 4, 7 )->Unit( benchmark::kMillisecond );
BENCHMARK( translate_whole_corpus )->Unit( benchmark::kMillisecond );
BENCHMARK( after_function_random )->Arg( 4 )->Arg( 6 )->Arg( 8 )->Unit( benchmark::kMicrosecond );
BENCHMARK( evaluate_random )->Unit( benchmark::kMicrosecond );
BENCHMARK_MAIN();
