#include "fermicat/fock.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fermicat {

FockKet apply_to_vacuum(const SignWord& word) {
  int level = 0;
  for (std::size_t i = word.size(); i > 0; --i) {
    const int sign = word.at(i - 1);
    if (sign > 0) {
      if (level == 1) {
        return FockKet{std::nullopt};
      }
      level = 1;
    } else {
      if (level == 0) {
        return FockKet{std::nullopt};
      }
      level = 0;
    }
  }
  return FockKet{level};
}

int inner_product(const SignWord& a, const SignWord& b) {
  const FockKet left = apply_to_vacuum(a);
  const FockKet right = apply_to_vacuum(b);
  if (left.is_zero() || right.is_zero()) {
    return 0;
  }
  return left.level == right.level ? 1 : 0;
}

Mat2 letter_matrix(int sign) {
  Mat2 m = Mat2::Zero();
  if (sign > 0) {
    m(1, 0) = Rational(1);
  } else {
    m(0, 1) = Rational(1);
  }
  return m;
}

Mat2 matrix_rep(const SignWord& word) {
  Mat2 m = Mat2::Identity();
  for (std::size_t i = 0; i < word.size(); ++i) {
    m = m * letter_matrix(word.at(i));
  }
  return m;
}

bool NormalForm::is_zero() const {
  return one.is_zero() && create.is_zero() && annihilate.is_zero() && number.is_zero();
}

Mat2 NormalForm::matrix() const {
  // Basis contributions: 1 -> I, creation -> E10, annihilation -> E01,
  // occupation product -> E11.
  Mat2 m = Mat2::Zero();
  m(0, 0) = one;
  m(1, 1) = one + number;
  m(1, 0) = create;
  m(0, 1) = annihilate;
  return m;
}

std::string NormalForm::str() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  const auto append = [&out](const Rational& coeff, const char* name) {
    if (coeff.is_zero()) {
      return;
    }
    if (!out.empty()) {
      out += (coeff < Rational(0)) ? " - " : " + ";
    } else if (coeff < Rational(0)) {
      out += "-";
    }
    const Rational magnitude = abs(coeff);
    if (!(magnitude == Rational(1)) || name[0] == '1') {
      out += magnitude.str();
      if (name[0] != '1') {
        out += "*";
      }
    }
    if (name[0] != '1') {
      out += name;
    }
  };
  append(one, "1");
  append(create, "c");
  append(annihilate, "a");
  append(number, "c*a");
  return out;
}

NormalForm normal_order(const SignWord& word) {
  // Term-rewriting on linear combinations of words. The letters of a word are
  // stored as +1/-1; a word is in normal form when no '-' occurs left of a
  // '+'. Rules, applied to the leftmost offending pair:
  //   "-+" -> (drop the pair) - (swap the pair)   [anticommutator]
  //   "++" -> 0, "--" -> 0                        [nilpotence]
  std::map<std::vector<std::int8_t>, Rational> accumulated;
  std::vector<std::pair<std::vector<std::int8_t>, Rational>> pending;

  std::vector<std::int8_t> initial;
  initial.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    initial.push_back(static_cast<std::int8_t>(word.at(i)));
  }
  pending.emplace_back(std::move(initial), Rational(1));

  while (!pending.empty()) {
    auto [letters, coeff] = std::move(pending.back());
    pending.pop_back();

    bool rewritten = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == letters[i + 1]) {
        rewritten = true;  // square of a creator or annihilator: term dies
        break;
      }
      if (letters[i] < 0 && letters[i + 1] > 0) {
        std::vector<std::int8_t> dropped;
        dropped.reserve(letters.size() - 2);
        dropped.insert(dropped.end(), letters.begin(), letters.begin() + i);
        dropped.insert(dropped.end(), letters.begin() + i + 2, letters.end());
        std::vector<std::int8_t> swapped = letters;
        swapped[i] = 1;
        swapped[i + 1] = -1;
        pending.emplace_back(std::move(dropped), coeff);
        pending.emplace_back(std::move(swapped), -coeff);
        rewritten = true;
        break;
      }
    }
    if (!rewritten) {
      accumulated[letters] += coeff;
    }
  }

  NormalForm out{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (const auto& [letters, coeff] : accumulated) {
    if (coeff.is_zero()) {
      continue;
    }
    if (letters.empty()) {
      out.one += coeff;
    } else if (letters == std::vector<std::int8_t>{1}) {
      out.create += coeff;
    } else if (letters == std::vector<std::int8_t>{-1}) {
      out.annihilate += coeff;
    } else if (letters == std::vector<std::int8_t>{1, -1}) {
      out.number += coeff;
    } else {
      throw std::logic_error("normal ordering produced a non-reduced word");
    }
  }
  return out;
}

Rational hamiltonian_eigenvalue(int level) {
  if (level == 0) {
    return Rational(-1, 2);
  }
  if (level == 1) {
    return Rational(1, 2);
  }
  throw std::domain_error("occupation level must be 0 or 1, got " + std::to_string(level));
}

}  // namespace fermicat
