#include <pltl/automaton.hpp>
#include <pltl/hoa.hpp>
#include <pltl/lasso.hpp>
#include <pltl/parser.hpp>
#include <pltl/selftest.hpp>
#include <pltl/translation.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{

constexpr int exit_parse_error = 1;
constexpr int exit_resource_limit = 2;

std::string slurp( const std::string& path )
{
  std::ifstream in( path );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// An automaton given as HOA text, a path to an HOA file, or a formula to translate.
pltl::omega_automaton load_automaton( const std::string& source, std::size_t max_states )
{
  if ( source.rfind( "HOA:", 0 ) == 0 )
  {
    return pltl::parse_hoa( source );
  }
  if ( std::ifstream( source ).good() )
  {
    return pltl::parse_hoa( slurp( source ) );
  }
  return pltl::translate( pltl::parse( source ), {}, max_states ).automaton;
}

void print_stats( const pltl::translation_stats& s )
{
  std::cerr << "states: " << s.states << "\n"
            << "pairs: " << s.pairs << "\n"
            << "branches: " << s.branches << "\n"
            << "wc-states: " << s.bed_states << "\n"
            << "k: " << s.past_sets << "\n"
            << "n: " << s.size.n << "\n"
            << "m: " << s.size.m << "\n"
            << "mu: " << s.mu << "\n"
            << "nu: " << s.nu << "\n";
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Translate past-time LTL to deterministic Rabin automata" };
  app.require_subcommand( 1 );

  std::string formula_text;
  std::string format = "hoa";
  bool stats = false;
  std::size_t max_states = 200000;
  auto* translate_cmd = app.add_subcommand( "translate", "Translate a formula to a deterministic Rabin automaton" );
  translate_cmd->add_option( "formula", formula_text, "Formula" )->required();
  translate_cmd->add_option( "--format", format, "Output format" )->check( CLI::IsMember( { "hoa", "dot" } ) );
  translate_cmd->add_flag( "--stats", stats, "Print sizes to stderr" );
  translate_cmd->add_option( "--max-states", max_states, "State budget for every intermediate automaton" );

  std::string word_text;
  std::size_t position = 0;
  auto* eval_cmd = app.add_subcommand( "eval", "Evaluate a formula on a lasso word 'u ; v'" );
  eval_cmd->add_option( "formula", formula_text, "Formula" )->required();
  eval_cmd->add_option( "word", word_text, "Lasso word" )->required();
  eval_cmd->add_option( "position", position, "Position" )->default_val( 0 );

  std::string source;
  auto* check_cmd = app.add_subcommand( "check", "Check membership of a lasso word" );
  check_cmd->add_option( "automaton", source, "HOA text, HOA file or formula" )->required();
  check_cmd->add_option( "word", word_text, "Lasso word" )->required();
  check_cmd->add_option( "--max-states", max_states, "State budget when translating a formula" );

  std::string suite;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  auto* selftest_cmd = app.add_subcommand( "selftest", "Run a randomized property suite" );
  selftest_cmd->add_option( "suite", suite, "Suite name" )->required()->check( CLI::IsMember( pltl::suite_names() ) );
  selftest_cmd->add_option( "--seed", seed, "Random seed" );
  selftest_cmd->add_option( "--count", count, "Number of cases" );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( *translate_cmd )
    {
      const auto result = pltl::translate( pltl::parse( formula_text ), {}, max_states );
      std::cout << ( format == "dot" ? pltl::export_dot( result.automaton )
                                     : pltl::export_hoa( result.automaton, formula_text ) );
      if ( stats )
      {
        print_stats( result.stats );
      }
    }
    else if ( *eval_cmd )
    {
      const auto f = pltl::parse( formula_text );
      std::cout << ( pltl::holds( f, pltl::parse_lasso( word_text ), position ) ? "true" : "false" ) << "\n";
    }
    else if ( *check_cmd )
    {
      const auto a = load_automaton( source, max_states );
      std::cout << ( pltl::accepts( a, pltl::parse_lasso( word_text ) ) ? "accept" : "reject" ) << "\n";
    }
    else if ( *selftest_cmd )
    {
      std::cout << "seed: " << seed << "\n";
      const auto r = pltl::run_suite( suite, seed, count );
      for ( const auto& f : r.failures )
      {
        std::cout << "counterexample: " << f << "\n";
      }
      std::cout << r.name << ": " << r.passed << "/" << r.total << " pass (" << r.seconds << " s)\n";
      return r.ok() ? 0 : 3;
    }
  }
  catch ( const pltl::parse_error& e )
  {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse_error;
  }
  catch ( const pltl::hoa_error& e )
  {
    std::cerr << "HOA error: " << e.what() << "\n";
    return exit_parse_error;
  }
  catch ( const std::invalid_argument& e )
  {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_parse_error;
  }
  catch ( const pltl::resource_limit_error& e )
  {
    std::cerr << "resource limit: " << e.what() << "\n";
    return exit_resource_limit;
  }
  catch ( const std::length_error& e )
  {
    std::cerr << "resource limit: " << e.what() << "\n";
    return exit_resource_limit;
  }
  return 0;
}
