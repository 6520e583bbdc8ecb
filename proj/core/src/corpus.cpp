#include <pltl/corpus.hpp>

namespace pltl
{

const std::string& intro_pltl()
{
  static const std::string text = "G (p <-> (O q & O r))";
  return text;
}

const std::string& intro_ltl()
{
  static const std::string text = "(((!p & !q) W (r & ((!p & !q) W (p & q)))) | ((!p & !r) W (q & ((!p & !r) W (p & r))))) "
                                  "& G (p -> X G p)";
  return text;
}

const std::vector<corpus_entry>& corpus()
{
  static const std::vector<corpus_entry> entries = {
      { "true", "tt" },
      { "false", "ff" },
      { "yesterday_true", "Y tt" },
      { "weak_yesterday_false", "wY ff" },
      { "next_since_next", "X (p S X q)" },
      { "intro_pltl", intro_pltl() },
      { "intro_ltl", intro_ltl() },
      { "stays_forever", "G (p -> X G p)" },
      { "atom", "p" },
      { "negated_atom", "!p" },
      { "next", "X p" },
      { "eventually", "F p" },
      { "globally", "G p" },
      { "infinitely_often", "G F p" },
      { "eventually_always", "F G p" },
      { "until", "p U q" },
      { "weak_until", "p W q" },
      { "release", "p R q" },
      { "strong_release", "p M q" },
      { "response", "G (p -> F q)" },
      { "fairness", "G F p -> G F q" },
      { "persistence_or_recurrence", "F G p | G F q" },
      { "nested_until", "(p U q) U r" },
      { "x_until", "X (p U X q)" },
      { "since", "p S q" },
      { "weak_since", "p wS q" },
      { "back", "p B q" },
      { "weak_back", "p wB q" },
      { "yesterday", "Y p" },
      { "weak_yesterday", "wY p" },
      { "yesterday_contradiction", "Y p & !p" },
      { "once", "O p" },
      { "historically", "H p" },
      { "globally_once", "G O p" },
      { "globally_historically", "G H p" },
      { "eventually_historically", "F H p" },
      { "globally_yesterday", "G (p -> Y q)" },
      { "precedence", "G (q -> O p)" },
      { "response_past", "G (q -> Y (p S r))" },
      { "since_recurrence", "G F (p S q)" },
      { "since_persistence", "F G (p S q)" },
      { "weak_since_recurrence", "G F (p wS q)" },
      { "until_with_past", "(Y p) U q" },
      { "until_since", "(p S q) U r" },
      { "release_since", "p R (q S r)" },
      { "next_once", "X O (p & X q)" },
      { "past_future_mix", "G (p -> X (q S p))" },
      { "once_then_eventually", "G (O p -> F q)" },
      { "back_globally", "G (p B q)" },
      { "weak_back_eventually", "F (p wB q)" },
      { "yesterday_chain", "G (Y Y p -> q)" },
      { "historically_until", "(H p) U q" },
      { "strong_release_past", "(O q) M p" },
      { "exactly_after", "G ((p & Y !p) -> F q)" },
      { "stuttering_since", "G (p S (q | r))" },
      { "first_occurrence", "F (p & wY H !p)" },
  };
  return entries;
}

} // namespace pltl
