#pragma once

// Monoid presentations [X ; R] as plain data, plus assembly of the standard
// presentation [X, Y ; R, S, T] of a semidirect product, where T holds one
// relation  y x = (x)θ_y y  per generator pair. Assembly only: nothing here
// rewrites words or decides whether the result presents anything.

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace monoidlab {

  using Word = std::vector<std::string>;  // empty word denotes 1

  struct Relation {
    Word lhs;
    Word rhs;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relation>    relations;

    friend bool operator==(Presentation const&, Presentation const&) = default;
  };

  // Throws BadParameter if a relation uses an undeclared symbol or a
  // generator is declared twice.
  void check_presentation(Presentation const& p);

  // Keyed by (y, x): the word over X chosen for (x)θ_y.
  using GeneratorAction = std::map<std::pair<std::string, std::string>, Word>;

  struct SemidirectPresentation {
    Presentation presentation;
    // B-side generators renamed because they clashed with A-side symbols,
    // as (original, renamed).
    std::vector<std::pair<std::string, std::string>> renamed;
    std::size_t                                      action_relations = 0;  // |T|
  };

  SemidirectPresentation build_semidirect_presentation(Presentation const&    pA,
                                                       Presentation const&    pB,
                                                       GeneratorAction const& action);

  // Text form: first line lists generators; then one "lhs = rhs" per line,
  // symbols separated by spaces, "1" for the empty word.
  void         write_presentation(std::ostream& os, Presentation const& p);
  Presentation read_presentation(std::istream& is);

  std::string to_string(Word const& w);

}  // namespace monoidlab
