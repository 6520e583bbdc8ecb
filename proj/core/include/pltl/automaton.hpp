#pragma once

#include <pltl/lasso.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pltl
{

enum class acceptance_kind
{
  none,
  buchi,
  co_buchi,
  rabin
};

/// Rabin pair: accepted iff `fin` is visited finitely often and `inf` infinitely often.
struct rabin_pair
{
  std::vector<bool> fin;
  std::vector<bool> inf;
};

/// Thrown when a construction exceeds its state budget.
class resource_limit_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Explicit deterministic, complete automaton with state-based acceptance.
///
/// Letters are bit masks over `ap`: bit i set iff ap[i] holds. An automaton
/// of kind `none` is a bed automaton.
struct omega_automaton
{
  std::vector<std::string> ap;
  std::uint32_t initial = 0;
  std::vector<std::uint32_t> delta; // state * letter_count() + letter
  std::vector<std::string> labels;
  acceptance_kind kind = acceptance_kind::none;
  std::vector<bool> acc;            // Buchi: accepting set; co-Buchi: rejecting set
  std::vector<rabin_pair> pairs;

  [[nodiscard]] std::size_t letter_count() const noexcept { return std::size_t{ 1 } << ap.size(); }
  [[nodiscard]] std::size_t state_count() const noexcept { return labels.size(); }
  [[nodiscard]] std::uint32_t successor( std::uint32_t state, std::uint32_t letter ) const
  {
    return delta[state * letter_count() + letter];
  }
};

/// Bit mask of `l` over `ap`; propositions outside `ap` are ignored.
[[nodiscard]] std::uint32_t encode_letter( const std::vector<std::string>& ap, const letter& l );
[[nodiscard]] letter decode_letter( const std::vector<std::string>& ap, std::uint32_t mask );

/// Deterministic runner reading its own state, the bed's successor state and a letter.
class runner
{
public:
  virtual ~runner() = default;

  [[nodiscard]] virtual acceptance_kind kind() const = 0;
  [[nodiscard]] virtual std::uint32_t initial() = 0;
  [[nodiscard]] virtual std::uint32_t step( std::uint32_t state, std::uint32_t bed_next, std::uint32_t letter ) = 0;
  /// Accepting (Buchi) or rejecting (co-Buchi) membership.
  [[nodiscard]] virtual bool in_acceptance_set( std::uint32_t state ) = 0;
  [[nodiscard]] virtual std::string label( std::uint32_t state ) = 0;
};

/// Runner given by explicit tables, mostly for tests.
class explicit_runner : public runner
{
public:
  explicit_runner( acceptance_kind kind, std::size_t bed_states, std::size_t letters, std::uint32_t initial,
                   std::vector<std::uint32_t> delta, std::vector<bool> acc );

  [[nodiscard]] acceptance_kind kind() const override { return _kind; }
  [[nodiscard]] std::uint32_t initial() override { return _initial; }
  [[nodiscard]] std::uint32_t step( std::uint32_t state, std::uint32_t bed_next, std::uint32_t letter ) override;
  [[nodiscard]] bool in_acceptance_set( std::uint32_t state ) override { return _acc.at( state ); }
  [[nodiscard]] std::string label( std::uint32_t state ) override { return std::to_string( state ); }

private:
  acceptance_kind _kind;
  std::size_t _bed_states;
  std::size_t _letters;
  std::uint32_t _initial;
  std::vector<std::uint32_t> _delta; // (state * bed_states + bed) * letters + letter
  std::vector<bool> _acc;
};

/// Reachable part of bed x runner; acceptance is lifted from the runner.
[[nodiscard]] omega_automaton cascade( const omega_automaton& bed, runner& run,
                                       std::size_t max_states = 200000 );

/// One-pair Rabin automaton accepting iff every co-Buchi and every Buchi
/// component accepts. Buchi components are chained by a round-robin counter.
[[nodiscard]] omega_automaton rabin_conjunction( const std::vector<omega_automaton>& co_buchis,
                                                 const std::vector<omega_automaton>& buchis,
                                                 std::size_t max_states = 200000 );

/// Product automaton whose pairs are the union of the lifted component pairs.
[[nodiscard]] omega_automaton rabin_union( const std::vector<omega_automaton>& autos,
                                           std::size_t max_states = 200000 );

/// Same language, Rabin acceptance (Buchi and co-Buchi become one pair).
[[nodiscard]] omega_automaton to_rabin( const omega_automaton& a );

/// Lasso membership for any acceptance kind (kind `none` accepts nothing).
[[nodiscard]] bool accepts( const omega_automaton& a, const lasso_word& w );

struct audit_report
{
  bool ok = true;
  std::string message;
};

/// Checks determinism, completeness and well-formed acceptance sets.
[[nodiscard]] audit_report audit( const omega_automaton& a );

} // namespace pltl
