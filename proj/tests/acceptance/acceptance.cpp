// Acceptance criteria: one PASS/FAIL line each, non-zero exit if any fails.

#include "../support/naive_eval.hpp"

#include <pltl/after.hpp>
#include <pltl/automaton.hpp>
#include <pltl/corpus.hpp>
#include <pltl/lasso.hpp>
#include <pltl/parser.hpp>
#include <pltl/past.hpp>
#include <pltl/random.hpp>
#include <pltl/selftest.hpp>
#include <pltl/stability.hpp>
#include <pltl/translation.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <string>

using namespace pltl;

namespace
{

constexpr std::uint64_t seed = 20240601;

constexpr std::size_t after_cases = 1000;
constexpr double after_seconds = 60.0;
constexpr std::size_t entailment_cases = 500;
constexpr std::size_t master_cases = 200;
constexpr double master_seconds = 300.0;
constexpr std::size_t min_corpus = 50;
constexpr std::size_t words_per_formula = 200;
constexpr double e2e_seconds = 600.0;
constexpr std::size_t e2e_max_states = 200000;
constexpr std::size_t intro_words = 1000;
constexpr std::size_t oracle_cases = 2000;
constexpr std::size_t monotonicity_cases = 500;
constexpr std::size_t mn_cases = 500;
constexpr std::size_t chain_formulas = 200;
constexpr std::size_t limit_cases = 300;

struct outcome
{
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string note;

  void record( bool ok, const std::string& failure = {} )
  {
    ++total;
    if ( ok )
    {
      ++passed;
    }
    else if ( note.empty() )
    {
      note = failure;
    }
  }
  [[nodiscard]] bool ok() const { return total > 0 && passed == total; }
};

class timer
{
public:
  [[nodiscard]] double seconds() const
  {
    return std::chrono::duration<double>( std::chrono::steady_clock::now() - _start ).count();
  }

private:
  std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
};

int failures = 0;

void report( int id, const std::string& what, const outcome& o, double seconds, double limit = 0.0 )
{
  const bool in_time = limit <= 0.0 || seconds <= limit;
  const bool ok = o.ok() && in_time;
  failures += ok ? 0 : 1;
  std::cout << ( ok ? "PASS" : "FAIL" ) << " [" << id << "] " << what << ": " << o.passed << "/" << o.total << " in "
            << seconds << " s";
  if ( limit > 0.0 )
  {
    std::cout << " (limit " << limit << " s)";
  }
  if ( !o.note.empty() )
  {
    std::cout << "; first failure: " << o.note;
  }
  std::cout << std::endl;
}

outcome from_suite( const suite_result& r )
{
  outcome o;
  o.passed = r.passed;
  o.total = r.total;
  if ( !r.failures.empty() )
  {
    o.note = r.failures.front();
  }
  return o;
}

std::string describe( formula f, const lasso_word& w, std::size_t t )
{
  return to_string( f ) + " on " + to_string( w ) + " at " + std::to_string( t );
}

std::vector<std::string> alphabet_for( formula f )
{
  auto ap = default_ap( 3 );
  for ( const auto& v : variables( f ) )
  {
    if ( std::find( ap.begin(), ap.end(), v ) == ap.end() )
    {
      ap.push_back( v );
    }
  }
  return ap;
}

formula_set random_subset( generator& gen, const formula_set& s )
{
  formula_set out;
  for ( const auto& x : s )
  {
    if ( gen.uniform( 0, 1 ) )
    {
      out.insert( x );
    }
  }
  return out;
}

void criterion_corpus_translation()
{
  timer clock;
  outcome o;
  const auto& entries = corpus();
  o.record( entries.size() >= min_corpus, "corpus has only " + std::to_string( entries.size() ) + " formulas" );
  for ( const auto& required : { "tt", "ff", "Y tt", "wY ff", "X (p S X q)", "G (p <-> (O q & O r))",
                                 intro_ltl().c_str(), "G (p -> X G p)" } )
  {
    const auto f = parse( required );
    const bool present = std::any_of( entries.begin(), entries.end(),
                                      [&]( const corpus_entry& e ) { return parse( e.text ) == f; } );
    o.record( present, std::string( "missing " ) + required );
  }
  const auto r = run_translation_suite( seed, words_per_formula, e2e_max_states );
  o.passed += r.passed;
  o.total += r.total;
  if ( o.note.empty() && !r.failures.empty() )
  {
    o.note = r.failures.front();
  }
  report( 4, "corpus automata agree with evaluation (" + std::to_string( words_per_formula ) + " words each)", o,
          clock.seconds(), e2e_seconds );
}

void criterion_intro()
{
  timer clock;
  outcome o;
  const auto ap = default_ap( 3 );
  const auto with_past = translate( parse( intro_pltl() ), ap ).automaton;
  const auto without_past = translate( parse( intro_ltl() ), ap ).automaton;
  generator gen( seed + 5 );
  for ( std::size_t i = 0; i < intro_words; ++i )
  {
    const auto w = gen.random_lasso( ap );
    o.record( accepts( with_past, w ) == accepts( without_past, w ), to_string( w ) );
  }
  report( 5, "intro property with and without past operators agree", o, clock.seconds() );
}

void criterion_audits()
{
  timer clock;
  outcome o;
  for ( const auto& e : corpus() )
  {
    const auto f = parse( e.text );
    const auto ap = alphabet_for( f );
    const auto r = translate( f, ap, e2e_max_states );
    const auto mn = r.stats.mu + r.stats.nu;
    o.record( static_cast<double>( r.stats.pairs ) <= std::ldexp( 1.0, static_cast<int>( mn ) ),
              e.name + ": pairs " + std::to_string( r.stats.pairs ) );
    // log2(states) <= 2^(n + 2m)
    const double exponent = static_cast<double>( r.stats.size.n + 2 * r.stats.size.m );
    o.record( exponent >= 63 || std::log2( static_cast<double>( r.stats.bed_states ) ) <= std::ldexp( 1.0, static_cast<int>( exponent ) ),
              e.name + ": bed states " + std::to_string( r.stats.bed_states ) );
    const auto final_audit = audit( r.automaton );
    o.record( final_audit.ok, e.name + ": " + final_audit.message );

    translation_context ctx( f, ap );
    const auto bed_audit = audit( ctx.wc_automaton( e2e_max_states ) );
    o.record( bed_audit.ok, e.name + " bed: " + bed_audit.message );
    for ( const auto& m : subsets( mu_set( f ) ) )
    {
      for ( const auto& n : subsets( nu_set( f ) ) )
      {
        const auto branch = audit( ctx.build_rabin_component( m, n, e2e_max_states ) );
        o.record( branch.ok, e.name + " branch: " + branch.message );
      }
    }
  }
  report( 6, "pair bound, bed size bound and determinism/completeness audits", o, clock.seconds() );
}

void criterion_oracle()
{
  timer clock;
  outcome o;
  generator gen( seed + 7 );
  formula_limits limits;
  limits.max_size = 8;
  limits.max_psf = 3;
  const auto ap = default_ap( 3 );
  for ( std::size_t i = 0; i < oracle_cases; ++i )
  {
    const auto f = gen.random_formula( limits );
    const auto w = gen.random_lasso( ap );
    const auto t = gen.uniform( 0, 8 );
    const auto horizon = 4 * ( w.prefix.size() + w.period.size() ) * std::max<std::size_t>( 1, size( f ).total() );
    testing::naive_evaluator naive( w, horizon + t + 1 );
    o.record( holds( f, w, t ) == naive.holds( f, t ), describe( f, w, t ) );
  }
  report( 7, "evaluator agrees with the unrolled oracle", o, clock.seconds() );
}

void criterion_monotonicity()
{
  timer clock;
  outcome o;
  generator gen( seed + 81 );
  formula_limits limits;
  limits.max_psf = 3;
  const auto ap = default_ap( 3 );
  for ( std::size_t i = 0; i < monotonicity_cases; ++i )
  {
    const auto f = gen.random_formula( limits );
    const auto small = random_subset( gen, psf( f ) );
    auto large = small;
    for ( const auto& x : random_subset( gen, psf( f ) ) )
    {
      large.insert( x );
    }
    const auto w = gen.random_lasso( ap );
    const auto t = gen.uniform( 0, 8 );
    o.record( !holds( rewrite_under( f, small ), w, t ) || holds( rewrite_under( f, large ), w, t ),
              describe( f, w, t ) );
  }
  report( 8, "rewrite-subset monotonicity", o, clock.seconds() );
}

void criterion_limit_rewrites()
{
  timer clock;
  outcome o;
  generator gen( seed + 82 );
  const formula_limits limits;
  const auto ap = default_ap( 3 );
  for ( std::size_t i = 0; i < mn_cases; ++i )
  {
    const auto f = gen.random_formula( limits );
    const auto w = gen.random_lasso( ap );
    const auto t = gen.uniform( 0, 8 );
    evaluator ev( w );
    const auto s = compute_limit_sets( f, ev, 0 );
    const bool now = ev.holds( f, t );

    auto m1 = s.f;
    for ( const auto& x : random_subset( gen, mu_set( f ) ) )
    {
      m1.insert( x );
    }
    const auto m2 = random_subset( gen, s.gf );
    auto n3 = s.fg;
    for ( const auto& x : random_subset( gen, nu_set( f ) ) )
    {
      n3.insert( x );
    }
    const auto n4 = random_subset( gen, s.g );

    const bool c1 = !now || ev.holds( rewrite_M( f, m1 ), t );
    const bool c2 = !ev.holds( rewrite_M( f, m2 ), t ) || now;
    const bool c3 = !now || ev.holds( rewrite_N( f, n3 ), t );
    const bool c4 = !ev.holds( rewrite_N( f, n4 ), t ) || now;
    o.record( c1 && c2 && c3 && c4, describe( f, w, t ) + " clauses " + std::to_string( c1 ) + std::to_string( c2 ) +
                                        std::to_string( c3 ) + std::to_string( c4 ) );
  }
  report( 8, "limit-set rewrite clauses 1-4", o, clock.seconds() );
}

void check_chains( formula f, outcome& o )
{
  const auto sets = enumerate_past_sets( f );
  std::vector<std::size_t> chain;
  const std::function<void()> extend = [&]() {
    if ( !chain.empty() )
    {
      auto folded = rewrite_under( f, sets[chain[0]] );
      std::vector<formula_set> sequence{ sets[chain[0]] };
      for ( std::size_t j = 1; j < chain.size(); ++j )
      {
        folded = rewrite_under( folded, rewrite_set( sets[chain[j]], sets[chain[j - 1]] ) );
        sequence.push_back( sets[chain[j]] );
      }
      std::string where = to_string( f ) + " chain";
      for ( auto c : chain )
      {
        where += " " + std::to_string( c );
      }
      o.record( folded == rewrite_under( f, sets[chain.back()] ), where );

      auto sequential = f;
      for ( const auto& c : sequence )
      {
        sequential = rewrite_under( sequential, c );
      }
      o.record( rewrite_under( f, compose_sequence( f, sequence ) ) == sequential, where + " composed" );
    }
    if ( chain.size() == 3 )
    {
      return;
    }
    for ( std::size_t next = 0; next < sets.size(); ++next )
    {
      if ( chain.empty() || is_saturated( sets[chain.back()], sets[next], f ) )
      {
        chain.push_back( next );
        extend();
        chain.pop_back();
      }
    }
  };
  extend();
}

void criterion_saturation_chains()
{
  timer clock;
  outcome o;
  for ( const auto& e : corpus() )
  {
    const auto f = parse( e.text );
    if ( psf( f ).size() <= 3 )
    {
      check_chains( f, o );
    }
  }
  generator gen( seed + 83 );
  formula_limits limits;
  limits.max_size = 8;
  limits.max_psf = 3;
  for ( std::size_t i = 0; i < chain_formulas; ++i )
  {
    check_chains( gen.random_formula( limits ), o );
  }
  report( 8, "saturation-chain and sequence-composition identities", o, clock.seconds() );
}

/// Whether the residuals of `f` along `w` reach the constant `target` within `bound` letters.
bool reaches( formula f, const lasso_word& w, std::size_t bound, bool target )
{
  prop_context ctx;
  after_engine engine( ctx );
  auto z = ctx.canonicalize( f );
  for ( std::size_t t = 0;; ++t )
  {
    if ( target ? ctx.is_true( z ) : ctx.is_false( z ) )
    {
      return true;
    }
    if ( t == bound )
    {
      return false;
    }
    z = engine.af( z, w.at( t ) );
  }
}

void criterion_fragment_limits()
{
  timer clock;
  outcome o;
  generator gen( seed + 84 );
  const auto ap = default_ap( 3 );
  formula_limits mu_limits;
  mu_limits.operators = { op::next, op::until, op::strong_release, op::yesterday, op::weak_yesterday,
                          op::since, op::weak_since, op::back, op::weak_back };
  formula_limits nu_limits = mu_limits;
  nu_limits.operators = { op::next, op::weak_until, op::release, op::yesterday, op::weak_yesterday,
                          op::since, op::weak_since, op::back, op::weak_back };
  for ( std::size_t i = 0; i < limit_cases; ++i )
  {
    const bool mu = i % 2 == 0;
    const auto f = gen.random_formula( mu ? mu_limits : nu_limits );
    const auto w = gen.random_lasso( ap );
    const auto bound = w.prefix.size() + ( size( f ).total() + 2 ) * w.period.size();
    const bool sat = holds( f, w, 0 );
    const bool ok = mu ? sat == reaches( f, w, bound, true ) : sat == !reaches( f, w, bound, false );
    o.record( ok && ( mu ? in_mu_fragment( f ) : in_nu_fragment( f ) ), describe( f, w, 0 ) );
  }
  report( 8, "mu formulas reach tt and nu formulas avoid ff within the bound", o, clock.seconds() );
}

} // namespace

int main()
{
  std::cout << "seed: " << seed << std::endl;
  {
    timer clock;
    const auto r = run_after_suite( seed, after_cases );
    report( 1, "after-function residual preserves truth", from_suite( r ), clock.seconds(), after_seconds );
  }
  {
    timer clock;
    const auto r = run_entailment_suite( seed + 1, entailment_cases );
    report( 2, "rewriting under composed entailed sets preserves truth", from_suite( r ), clock.seconds() );
  }
  {
    timer clock;
    const auto r = run_master_suite( seed + 2, master_cases );
    report( 3, "decomposition premises agree with evaluation", from_suite( r ), clock.seconds(), master_seconds );
  }
  criterion_corpus_translation();
  criterion_intro();
  criterion_audits();
  criterion_oracle();
  criterion_monotonicity();
  criterion_limit_rewrites();
  criterion_saturation_chains();
  criterion_fragment_limits();
  std::cout << ( failures == 0 ? "all criteria pass" : std::to_string( failures ) + " criteria fail" ) << std::endl;
  return failures == 0 ? 0 : 1;
}
