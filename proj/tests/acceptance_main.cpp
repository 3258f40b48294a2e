// End-to-end acceptance gate for the strand-calculus engine. Every criterion
// recomputes its expected values from scratch (plain integer matrices, level
// walks, sign scans) so a pass certifies the engine against independent
// arithmetic, not against itself.
#include <array>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fermicat/bimodule.hpp"
#include "fermicat/diagram.hpp"
#include "fermicat/fock.hpp"
#include "fermicat/lang.hpp"
#include "fermicat/linalg.hpp"
#include "fermicat/morphism.hpp"
#include "fermicat/normalize.hpp"
#include "fermicat/rational.hpp"
#include "fermicat/sign_word.hpp"
#include "fermicat/two_cat.hpp"
#include "fermicat/verify.hpp"

using fermicat::Atom;
using fermicat::DiagramExpr;
using fermicat::Morphism;
using fermicat::RatMatrix;
using fermicat::Rational;
using fermicat::RepContext;
using fermicat::SignWord;

namespace {

// Always-on check: prints the failing location and makes the criterion fail.
#define REQUIRE(cond, msg)                                                   \
  do {                                                                       \
    if (!(cond)) {                                                           \
      std::cerr << "       [FAIL] " << __FILE__ << ":" << __LINE__ << "  "   \
                << msg << "\n";                                              \
      return false;                                                          \
    }                                                                        \
  } while (0)

SignWord W(const char* s) { return SignWord::from_string(s); }

DiagramExpr D(const char* text) { return fermicat::parse_diagram(text); }

std::vector<SignWord> enumerate_words(int max_len) {
  std::vector<SignWord> out;
  for (int len = 0; len <= max_len; ++len)
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      std::vector<std::int8_t> letters(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i)
        letters[static_cast<std::size_t>(i)] =
            static_cast<std::int8_t>(((mask >> i) & 1u) ? 1 : -1);
      out.emplace_back(std::move(letters));
    }
  return out;
}

// ---- independent oracles ---------------------------------------------------

// Occupation-level walk: apply the word to |start>, rightmost letter first;
// '+' raises 0 to 1, '-' lowers 1 to 0, anything else kills the state.
std::optional<int> level_walk(const SignWord& w, int start) {
  int level = start;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w.at(i) > 0) {
      if (level == 1) return std::nullopt;
      level = 1;
    } else {
      if (level == 0) return std::nullopt;
      level = 0;
    }
  }
  return level;
}

int fock_inner_oracle(const SignWord& a, const SignWord& b) {
  const std::optional<int> la = level_walk(a, 0);
  const std::optional<int> lb = level_walk(b, 0);
  return (la && lb && *la == *lb) ? 1 : 0;
}

bool has_repeated_letter(const SignWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w.at(i) == w.at(i + 1)) return true;
  return false;
}

// 2x2 integer matrices in the (|0>, |1>) column basis; entries of strand-word
// products stay in {0,1}.
using IntMat = std::array<int, 4>;  // row-major: a[0] a[1] / a[2] a[3]

constexpr IntMat kIdent{1, 0, 0, 1};
constexpr IntMat kRaise{0, 0, 1, 0};
constexpr IntMat kLower{0, 1, 0, 0};

IntMat mul(const IntMat& x, const IntMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

IntMat word_matrix_oracle(const SignWord& w) {
  IntMat acc = kIdent;
  for (std::size_t i = 0; i < w.size(); ++i)
    acc = mul(acc, w.at(i) > 0 ? kRaise : kLower);
  return acc;
}

Atom atom_oracle(const SignWord& w) {
  const IntMat m = word_matrix_oracle(w);
  if (m == IntMat{0, 0, 0, 0}) return Atom::Zero;
  if (m == kIdent) return Atom::Unit;
  if (m == kRaise) return Atom::Plus;
  if (m == kLower) return Atom::Minus;
  if (m == IntMat{0, 0, 0, 1}) return Atom::PlusMinus;
  return Atom::MinusPlus;  // diag(1, 0): lowering then raising
}

// Region-label walk from a base value on the right: the label left of letter
// i is label(i+1) + letter(i). Valid means every label stays in {0, 1}.
bool labels_stay_in_range(const SignWord& w, int base) {
  int label = base;
  if (label != 0 && label != 1) return false;
  for (std::size_t i = w.size(); i-- > 0;) {
    label += w.at(i);
    if (label != 0 && label != 1) return false;
  }
  return true;
}

int left_label(const SignWord& w, int base) {
  int label = base;
  for (std::size_t i = w.size(); i-- > 0;) label += w.at(i);
  return label;
}

bool same(const RatMatrix& a, const RatMatrix& b) { return fermicat::same_matrix(a, b); }

RatMatrix ident(int d) { return RatMatrix::Identity(d, d); }

// ---- criteria --------------------------------------------------------------

bool criterion_split_of_empty_word() {
  const DiagramExpr close_pm = D("cap(+-)");
  const DiagramExpr open_pm = D("cup(+-)");
  const DiagramExpr close_mp = D("cap(-+)");
  const DiagramExpr open_mp = D("cup(-+)");
  const auto nf = [](const DiagramExpr& e, std::optional<int> s) {
    return fermicat::normalize(e, s);
  };
  const auto stack = [](const DiagramExpr& lo, const DiagramExpr& up) {
    return DiagramExpr::compose(lo, up);
  };

  REQUIRE(fermicat::equal_morphisms(nf(stack(close_pm, open_pm), std::nullopt),
                                    nf(DiagramExpr::identity(W("+-")), std::nullopt)),
          "closing then reopening '+-' must be its identity");
  REQUIRE(fermicat::equal_morphisms(nf(stack(close_mp, open_mp), std::nullopt),
                                    nf(DiagramExpr::identity(W("-+")), std::nullopt)),
          "closing then reopening '-+' must be its identity");
  REQUIRE(nf(stack(close_pm, open_mp), std::nullopt).is_zero(),
          "closing '+-' then opening '-+' must vanish");
  REQUIRE(nf(stack(close_mp, open_pm), std::nullopt).is_zero(),
          "closing '-+' then opening '+-' must vanish");

  for (std::optional<int> s : {std::optional<int>{}, std::optional<int>{0}, std::optional<int>{1}}) {
    const Morphism sum = nf(stack(open_pm, close_pm), s).plus(nf(stack(open_mp, close_mp), s));
    REQUIRE(fermicat::equal_morphisms(sum, nf(DiagramExpr::identity(W("")), s)),
            "the two open-close composites must sum to the empty identity (base "
                << (s ? std::to_string(*s) : std::string("free")) << ")");
  }
  return true;
}

bool criterion_orthonormal_states() {
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) {
      const int got = fermicat::categorical_inner(fermicat::state(i), fermicat::state(j));
      REQUIRE(got == (i == j ? 1 : 0),
              "state pairing (" << i << ", " << j << ") returned " << got);
    }
  return true;
}

bool criterion_pairing_oracle_sweep() {
  const std::vector<SignWord> words = enumerate_words(8);
  long pairs = 0;
  long mismatches = 0;
  for (const SignWord& a : words)
    for (const SignWord& b : words) {
      ++pairs;
      if (fermicat::hom_dim(a, b, 0) != fock_inner_oracle(a, b)) ++mismatches;
    }
  REQUIRE(pairs == 511L * 511L, "expected 511^2 word pairs, saw " << pairs);
  REQUIRE(mismatches == 0, mismatches << " of " << pairs << " pairs disagree with the level walk");
  return true;
}

bool criterion_annihilation() {
  for (const SignWord& w : enumerate_words(8)) {
    if (!has_repeated_letter(w)) continue;
    for (std::optional<int> s : {std::optional<int>{}, std::optional<int>{0}, std::optional<int>{1}})
      REQUIRE(fermicat::normalize(DiagramExpr::identity(w), s).is_zero(),
              "identity on '" << w.str() << "' must normalize to zero");
  }

  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const DiagramExpr e = fermicat::random_crossing_diagram(6, 4, rng);
    REQUIRE(fermicat::normalize(e, 0).is_zero(),
            "crossing diagram " << trial << " ('" << fermicat::pretty_print(e)
                                << "') must normalize to zero");
    REQUIRE(fermicat::normalize(e).is_zero(),
            "crossing diagram " << trial << " must also vanish with a free base");
  }
  return true;
}

bool criterion_word_reduction() {
  for (const SignWord& w : enumerate_words(8)) {
    const Atom predicted = atom_oracle(w);
    const auto r = fermicat::reduce_word(w);
    REQUIRE(r.atom == predicted, "word '" << w.str() << "' reduced to "
                                          << fermicat::atom_name(r.atom) << ", matrix predicts "
                                          << fermicat::atom_name(predicted));
    if (predicted == Atom::Zero) {
      REQUIRE(fermicat::normalize(r.down, 0).is_zero() && fermicat::normalize(r.down, 1).is_zero(),
              "zero-class witness for '" << w.str() << "' must vanish");
      continue;
    }
    const DiagramExpr round = DiagramExpr::compose(r.down, r.up);
    const DiagramExpr round_back = DiagramExpr::compose(r.up, r.down);
    for (std::optional<int> s :
         {std::optional<int>{}, std::optional<int>{0}, std::optional<int>{1}}) {
      REQUIRE(fermicat::equal_morphisms(fermicat::normalize(round, s),
                                        fermicat::normalize(DiagramExpr::identity(w), s)),
              "down-then-up witness of '" << w.str() << "' must be the identity");
      REQUIRE(fermicat::equal_morphisms(fermicat::normalize(round_back, s),
                                        fermicat::normalize(DiagramExpr::identity(r.atom_word), s)),
              "up-then-down witness of '" << w.str() << "' must be the identity");
    }
  }
  return true;
}

bool criterion_matrix_model() {
  for (int n : {2, 3, 5}) {
    const RepContext ctx(n);
    const int max_len = n == 5 ? 4 : 6;
    for (const SignWord& w : enumerate_words(max_len))
      for (int s = 0; s <= 1; ++s) {
        const int dim = ctx.word_space(w, s).dim;
        if (!labels_stay_in_range(w, s)) {
          REQUIRE(dim == 0, "dead word '" << w.str() << "' at base " << s
                                          << " must have a zero space, got " << dim);
          continue;
        }
        const int t = left_label(w, s);
        const int want = (s == 1 ? n : 1) * (t == 1 ? n : 1);
        REQUIRE(dim == want, "word '" << w.str() << "' at base " << s << " has dim " << dim
                                      << ", expected " << want << " at size " << n);
      }

    // unit/counit composites collapse to identities on the quotients
    REQUIRE(same(ctx.eval(D("cup(-+) ; cap(-+)"), 0), ident(1)),
            "free counterclockwise loop must be 1 over the scalar base at n=" << n);
    REQUIRE(same(ctx.eval(D("cap(-+) ; cup(-+)"), 0), ident(1)),
            "close-open on '-+' must be its quotient identity at n=" << n);
    REQUIRE(same(ctx.eval(D("cup(+-) ; cap(+-)"), 1), ident(n * n)),
            "free clockwise loop must be the ring identity at n=" << n);
    REQUIRE(same(ctx.eval(D("cap(+-) ; cup(+-)"), 1), ident(n * n)),
            "close-open on '+-' must be its quotient identity at n=" << n);

    // the four strand-straightening identities
    REQUIRE(same(ctx.eval(D("cup(+-) * id(+) ; id(+) * cap(-+)"), 0), ident(n)),
            "left straightening of '+' at base 0 failed at n=" << n);
    REQUIRE(same(ctx.eval(D("id(+) * cup(-+) ; cap(+-) * id(+)"), 0), ident(n)),
            "right straightening of '+' at base 0 failed at n=" << n);
    REQUIRE(same(ctx.eval(D("cup(-+) * id(-) ; id(-) * cap(+-)"), 1), ident(n)),
            "left straightening of '-' at base 1 failed at n=" << n);
    REQUIRE(same(ctx.eval(D("id(-) * cup(+-) ; cap(-+) * id(-)"), 1), ident(n)),
            "right straightening of '-' at base 1 failed at n=" << n);

    // negative control: dropping the 1/n in the opening map inflates the loop
    const RatMatrix unnormalized_loop =
        ctx.close_pair_ambient(-1, 1) * (ctx.open_pair_ambient(-1, 1) * Rational(n));
    REQUIRE(same(unnormalized_loop, RatMatrix(ident(1) * Rational(n))),
            "un-normalized loop must equal n exactly at n=" << n);
    REQUIRE(!same(unnormalized_loop, ident(1)),
            "un-normalized loop must not be the identity at n=" << n);
  }
  return true;
}

bool criterion_soundness() {
  const RepContext ctx(2);
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const DiagramExpr e = fermicat::random_valid_diagram(0, 6, 4, rng);
    const Morphism nf = fermicat::normalize(e, 0);
    REQUIRE(same(ctx.eval(e, 0), ctx.eval(nf)),
            "diagram " << trial << " ('" << fermicat::pretty_print(e)
                       << "') evaluates differently from its normal form");
  }
  return true;
}

bool criterion_normal_ordering() {
  for (const SignWord& w : enumerate_words(10)) {
    const fermicat::NormalForm nf = fermicat::normal_order(w);
    const IntMat want = word_matrix_oracle(w);
    // rebuild the 2x2 matrix of the ordered form from its four coefficients
    const std::array<Rational, 4> got = {
        nf.one, nf.annihilate,
        nf.create, nf.one + nf.number};
    for (int idx = 0; idx < 4; ++idx)
      REQUIRE(got[static_cast<std::size_t>(idx)] == Rational(want[static_cast<std::size_t>(idx)]),
              "entry " << idx << " of the ordered form of '" << w.str() << "' is "
                       << got[static_cast<std::size_t>(idx)].str() << ", product gives "
                       << want[static_cast<std::size_t>(idx)]);
  }
  REQUIRE(fermicat::hamiltonian_eigenvalue(0) == Rational(-1, 2),
          "vacuum energy must be -1/2");
  REQUIRE(fermicat::hamiltonian_eigenvalue(1) == Rational(1, 2),
          "occupied energy must be +1/2");
  return true;
}

struct Criterion {
  const char* name;
  bool (*check)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"two-summand split of the empty word", criterion_split_of_empty_word},
      {"occupation states pair orthonormally", criterion_orthonormal_states},
      {"pairing dimension matches the level-walk oracle on all word pairs up to length 8",
       criterion_pairing_oracle_sweep},
      {"repeated letters and crossings annihilate", criterion_annihilation},
      {"every word up to length 8 reduces to its matrix-predicted class with inverse witnesses",
       criterion_word_reduction},
      {"matrix model: dimensions, loop collapses, straightenings, negative control",
       criterion_matrix_model},
      {"evaluation factors through normal forms on 200 seeded diagrams", criterion_soundness},
      {"normal ordering preserves the 2x2 matrix up to length 10; energy levels are -1/2 and 1/2",
       criterion_normal_ordering},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const bool ok = criteria[i].check();
    all = all && ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name << "\n";
  }
  std::cout << (all ? "acceptance: all criteria hold\n" : "acceptance: criteria failed\n");
  return all ? 0 : 1;
}
