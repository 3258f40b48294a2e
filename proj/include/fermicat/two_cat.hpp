#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermicat/diagram.hpp"
#include "fermicat/morphism.hpp"
#include "fermicat/sign_word.hpp"

namespace fermicat {

// Isomorphism-class representatives of the composable strand words: the empty
// word, the four alternating words of length at most two, and the zero class
// for everything that annihilates.
enum class Atom {
  Zero,
  Unit,
  Plus,
  Minus,
  PlusMinus,
  MinusPlus,
};

std::string atom_name(Atom atom);

// The reduced class of a word regardless of base point: Zero for words with a
// repeated adjacent letter, otherwise the leading one or two letters
// depending on length parity.
Atom atom_of_word(const SignWord& word);

struct ValidationResult {
  Atom atom;
  int source;
  std::optional<int> target;  // empty exactly for the zero class
};

// Checks whether the word supports a region labelling starting at `source`
// on the right, and reduces it to its class.
ValidationResult validate(const SignWord& word, int source);

struct WordReduction {
  Atom atom;
  SignWord atom_word;   // empty for the zero class
  DiagramExpr down;     // word -> atom_word (identity when nothing to fold)
  DiagramExpr up;       // atom_word -> word
};

// Folds the rightmost adjacent opposite pair repeatedly, recording the turn
// diagrams. down-then-up and up-then-down are both identities after
// normalization; for the zero class the identity diagram itself normalizes
// to zero.
WordReduction reduce_word(const SignWord& word);

struct DirectSumWitness {
  Morphism into_first;    // turn closing "+-"
  Morphism from_first;    // turn opening "+-"
  Morphism into_second;   // turn closing "-+"
  Morphism from_second;   // turn opening "-+"

  struct Check {
    std::string name;
    bool pass;
  };
  std::vector<Check> checks;
  bool all_pass;
};

// Splits the empty word into the two length-two classes and verifies the five
// projection/inclusion identities. Without a source the completeness identity
// is checked in the formal bubble calculus; with one it is checked as
// scalars.
DirectSumWitness direct_sum_witness(std::optional<int> source = std::nullopt);

// A distinguished occupation state presented as a word with a base label.
struct StatePresentation {
  SignWord word;
  int source;

  friend bool operator==(const StatePresentation&, const StatePresentation&) = default;
};

// The two occupation states: level 0 is the closed pair "-+", level 1 the
// single creation strand "+", both based at 0. Throws std::domain_error for
// any other level.
StatePresentation state(int level);

// Dimension of the diagram space between two presented states; their base
// labels must agree for a nonzero answer.
int categorical_inner(const StatePresentation& a, const StatePresentation& b);

struct ActionResult {
  bool annihilated;
  StatePresentation state;  // meaningful when not annihilated
  Atom atom;
};

// Left multiplication by one strand: prepends the letter and revalidates.
ActionResult act(int sign, const StatePresentation& on);

}  // namespace fermicat
