#include "fermicat/two_cat.hpp"

#include <stdexcept>
#include <utility>

#include "fermicat/normalize.hpp"

namespace fermicat {

namespace {

SignWord atom_word_of(Atom atom) {
  switch (atom) {
    case Atom::Zero:
    case Atom::Unit:
      return SignWord();
    case Atom::Plus:
      return SignWord::from_string("+");
    case Atom::Minus:
      return SignWord::from_string("-");
    case Atom::PlusMinus:
      return SignWord::from_string("+-");
    case Atom::MinusPlus:
      return SignWord::from_string("-+");
  }
  throw std::logic_error("unhandled atom");
}

}  // namespace

std::string atom_name(Atom atom) {
  switch (atom) {
    case Atom::Zero:
      return "zero";
    case Atom::Unit:
      return "unit";
    case Atom::Plus:
      return "plus";
    case Atom::Minus:
      return "minus";
    case Atom::PlusMinus:
      return "plus-minus";
    case Atom::MinusPlus:
      return "minus-plus";
  }
  throw std::logic_error("unhandled atom");
}

Atom atom_of_word(const SignWord& word) {
  if (word.has_equal_adjacent_pair()) {
    return Atom::Zero;
  }
  if (word.empty()) {
    return Atom::Unit;
  }
  if (word.size() % 2 == 1) {
    return word.at(0) > 0 ? Atom::Plus : Atom::Minus;
  }
  return word.at(0) > 0 ? Atom::PlusMinus : Atom::MinusPlus;
}

ValidationResult validate(const SignWord& word, int source) {
  if (!word.valid_from(source)) {
    return {Atom::Zero, source, std::nullopt};
  }
  return {atom_of_word(word), source, word.target_from(source)};
}

WordReduction reduce_word(const SignWord& word) {
  const Atom atom = atom_of_word(word);
  if (atom == Atom::Zero) {
    return {atom, SignWord(), DiagramExpr::identity(word), DiagramExpr::identity(word)};
  }
  const SignWord core = atom_word_of(atom);

  struct FoldStep {
    SignWord prefix;
    int left_sign;
    int right_sign;
  };
  std::vector<FoldStep> steps;
  SignWord current = word;
  while (current.size() > core.size()) {
    const std::size_t n = current.size();
    steps.push_back({current.subword(0, n - 2), current.at(n - 2), current.at(n - 1)});
    current = current.subword(0, n - 2);
  }

  const auto turn_row = [](const FoldStep& step, bool closing) {
    DiagramExpr turn = closing ? DiagramExpr::cap(step.left_sign, step.right_sign)
                               : DiagramExpr::cup(step.left_sign, step.right_sign);
    if (step.prefix.empty()) {
      return turn;
    }
    return DiagramExpr::tensor(DiagramExpr::identity(step.prefix), std::move(turn));
  };

  DiagramExpr down = DiagramExpr::identity(word);
  if (!steps.empty()) {
    down = turn_row(steps.front(), true);
    for (std::size_t i = 1; i < steps.size(); ++i) {
      down = DiagramExpr::compose(std::move(down), turn_row(steps[i], true));
    }
  }

  DiagramExpr up = DiagramExpr::identity(core);
  if (!steps.empty()) {
    up = turn_row(steps.back(), false);
    for (std::size_t i = steps.size() - 1; i > 0; --i) {
      up = DiagramExpr::compose(std::move(up), turn_row(steps[i - 1], false));
    }
  }

  return {atom, core, std::move(down), std::move(up)};
}

DirectSumWitness direct_sum_witness(std::optional<int> source) {
  const DiagramExpr close_pm = DiagramExpr::cap(1, -1);
  const DiagramExpr open_pm = DiagramExpr::cup(1, -1);
  const DiagramExpr close_mp = DiagramExpr::cap(-1, 1);
  const DiagramExpr open_mp = DiagramExpr::cup(-1, 1);

  DirectSumWitness out{
      normalize(close_pm, source), normalize(open_pm, source),
      normalize(close_mp, source), normalize(open_mp, source),
      {},
      true,
  };

  const SignWord pm = SignWord::from_string("+-");
  const SignWord mp = SignWord::from_string("-+");

  const auto add_check = [&out](std::string name, bool pass) {
    out.checks.push_back({std::move(name), pass});
    out.all_pass = out.all_pass && pass;
  };

  add_check("close-open +- is the identity",
            equal_morphisms(normalize(DiagramExpr::compose(close_pm, open_pm), source),
                            normalize(DiagramExpr::identity(pm), source)));
  add_check("close-open -+ is the identity",
            equal_morphisms(normalize(DiagramExpr::compose(close_mp, open_mp), source),
                            normalize(DiagramExpr::identity(mp), source)));
  add_check("close +- then open -+ vanishes",
            normalize(DiagramExpr::compose(close_pm, open_mp), source).is_zero());
  add_check("close -+ then open +- vanishes",
            normalize(DiagramExpr::compose(close_mp, open_pm), source).is_zero());

  const Morphism completeness =
      normalize(DiagramExpr::compose(open_pm, close_pm), source)
          .plus(normalize(DiagramExpr::compose(open_mp, close_mp), source));
  add_check("open-close sum is the empty identity",
            equal_morphisms(completeness, normalize(DiagramExpr::identity(SignWord()), source)));

  return out;
}

StatePresentation state(int level) {
  if (level == 0) {
    return {SignWord::from_string("-+"), 0};
  }
  if (level == 1) {
    return {SignWord::from_string("+"), 0};
  }
  throw std::domain_error("occupation level must be 0 or 1, got " + std::to_string(level));
}

int categorical_inner(const StatePresentation& a, const StatePresentation& b) {
  if (a.source != b.source) {
    return 0;
  }
  return hom_dim(a.word, b.word, a.source);
}

ActionResult act(int sign, const StatePresentation& on) {
  const SignWord extended = on.word.prepended(sign);
  const ValidationResult checked = validate(extended, on.source);
  if (checked.atom == Atom::Zero) {
    return {true, StatePresentation{extended, on.source}, Atom::Zero};
  }
  return {false, StatePresentation{extended, on.source}, checked.atom};
}

}  // namespace fermicat
