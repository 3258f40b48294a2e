#include "fermicat/verify.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fermicat/bimodule.hpp"
#include "fermicat/fock.hpp"
#include "fermicat/linalg.hpp"
#include "fermicat/morphism.hpp"
#include "fermicat/normalize.hpp"
#include "fermicat/two_cat.hpp"

namespace fermicat {

bool Report::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

int Report::passed() const {
  int count = 0;
  for (const CheckResult& c : checks)
    if (c.pass) ++count;
  return count;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

SignWord unique_valid_word(int length, int source) {
  std::vector<std::int8_t> letters(static_cast<std::size_t>(length));
  int label = source;
  for (int i = length - 1; i >= 0; --i) {
    letters[static_cast<std::size_t>(i)] =
        static_cast<std::int8_t>(label == 0 ? 1 : -1);
    label = 1 - label;
  }
  return SignWord(std::move(letters));
}

std::vector<SignWord> all_words_up_to(int max_len) {
  std::vector<SignWord> out;
  for (int len = 0; len <= max_len; ++len) {
    const std::uint64_t count = std::uint64_t{1} << len;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::vector<std::int8_t> letters(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i)
        letters[static_cast<std::size_t>(i)] =
            static_cast<std::int8_t>(((mask >> i) & 1u) ? 1 : -1);
      out.emplace_back(std::move(letters));
    }
  }
  return out;
}

Report verify_direct_sum() {
  Report rep;
  rep.suite = "iso";
  const DirectSumWitness unlabeled = direct_sum_witness(std::nullopt);
  const DirectSumWitness at0 = direct_sum_witness(0);
  const DirectSumWitness at1 = direct_sum_witness(1);
  for (std::size_t i = 0; i < unlabeled.checks.size(); ++i) {
    CheckResult c;
    c.name = unlabeled.checks[i].name;
    c.pass = unlabeled.checks[i].pass && at0.checks[i].pass &&
             at1.checks[i].pass;
    c.detail = c.pass ? "holds unlabeled and at both base labels"
                      : "identity fails";
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

Report verify_state_pairing() {
  Report rep;
  rep.suite = "state-pairing";
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const int got = categorical_inner(state(i), state(j));
      const int want = i == j ? 1 : 0;
      CheckResult c;
      c.name = "pairing(" + std::to_string(i) + "," + std::to_string(j) +
               ") = " + std::to_string(want);
      c.pass = got == want;
      c.detail = "got " + std::to_string(got);
      rep.checks.push_back(std::move(c));
    }
  return rep;
}

namespace {

RatMatrix identity_matrix(int d) { return RatMatrix::Identity(d, d); }

CheckResult matrix_check(std::string name, const RatMatrix& got,
                         const RatMatrix& want) {
  CheckResult c;
  c.name = std::move(name);
  c.pass = same_matrix(got, want);
  std::ostringstream os;
  os << got.rows() << "x" << got.cols() << " matrix "
     << (c.pass ? "matches" : "differs");
  c.detail = os.str();
  return c;
}

}  // namespace

Report verify_adjunctions(int n) {
  Report rep;
  rep.suite = "adjunction";
  rep.n = n;
  const RepContext ctx(n);
  const SignWord empty = SignWord::from_string("");
  const SignWord mp = SignWord::from_string("-+");
  const SignWord pm = SignWord::from_string("+-");

  const RatMatrix close0 = ctx.eval(DiagramExpr::cap(-1, 1), 0);
  const RatMatrix open0 = ctx.eval(DiagramExpr::cup(-1, 1), 0);
  rep.checks.push_back(matrix_check(
      "close after open of -+ at base 0 is the identity", close0 * open0,
      identity_matrix(ctx.word_space(empty, 0).dim)));
  rep.checks.push_back(matrix_check(
      "open after close of -+ at base 0 is the identity", open0 * close0,
      identity_matrix(ctx.word_space(mp, 0).dim)));

  const RatMatrix close1 = ctx.eval(DiagramExpr::cap(1, -1), 1);
  const RatMatrix open1 = ctx.eval(DiagramExpr::cup(1, -1), 1);
  rep.checks.push_back(matrix_check(
      "close after open of +- at base 1 is the identity", close1 * open1,
      identity_matrix(ctx.word_space(empty, 1).dim)));
  rep.checks.push_back(matrix_check(
      "open after close of +- at base 1 is the identity", open1 * close1,
      identity_matrix(ctx.word_space(pm, 1).dim)));
  return rep;
}

Report verify_negative_control(int n) {
  Report rep;
  rep.suite = "negative-control";
  rep.n = n;
  const RepContext ctx(n);
  const RatMatrix close0 = ctx.eval(DiagramExpr::cap(-1, 1), 0);
  const RatMatrix open_raw = ctx.eval(DiagramExpr::cup(-1, 1), 0) * Rational(n);
  const RatMatrix prod = close0 * open_raw;
  const int d = ctx.word_space(SignWord::from_string(""), 0).dim;
  rep.checks.push_back(matrix_check(
      "opening without 1/n gives n times the identity", prod,
      identity_matrix(d) * Rational(n)));
  CheckResult c;
  c.name = "opening without 1/n is detected as wrong";
  c.pass = !same_matrix(prod, identity_matrix(d));
  c.detail = c.pass ? "normalization matters" : "no difference seen";
  rep.checks.push_back(std::move(c));
  return rep;
}

Report verify_zigzags(int n) {
  Report rep;
  rep.suite = "zigzag";
  rep.n = n;
  const RepContext ctx(n);
  const DiagramExpr up = DiagramExpr::identity(SignWord::from_string("+"));
  const DiagramExpr down = DiagramExpr::identity(SignWord::from_string("-"));

  const DiagramExpr z1 = DiagramExpr::compose(
      DiagramExpr::tensor(DiagramExpr::cup(1, -1), up),
      DiagramExpr::tensor(up, DiagramExpr::cap(-1, 1)));
  const DiagramExpr z2 = DiagramExpr::compose(
      DiagramExpr::tensor(up, DiagramExpr::cup(-1, 1)),
      DiagramExpr::tensor(DiagramExpr::cap(1, -1), up));
  const DiagramExpr z3 = DiagramExpr::compose(
      DiagramExpr::tensor(DiagramExpr::cup(-1, 1), down),
      DiagramExpr::tensor(down, DiagramExpr::cap(1, -1)));
  const DiagramExpr z4 = DiagramExpr::compose(
      DiagramExpr::tensor(down, DiagramExpr::cup(1, -1)),
      DiagramExpr::tensor(DiagramExpr::cap(-1, 1), down));

  const RatMatrix id_up = ctx.eval(up, 0);
  const RatMatrix id_down = ctx.eval(down, 1);
  rep.checks.push_back(matrix_check(
      "up strand, bend opened on the left, straightens", ctx.eval(z1, 0),
      id_up));
  rep.checks.push_back(matrix_check(
      "up strand, bend opened on the right, straightens", ctx.eval(z2, 0),
      id_up));
  rep.checks.push_back(matrix_check(
      "down strand, bend opened on the left, straightens", ctx.eval(z3, 1),
      id_down));
  rep.checks.push_back(matrix_check(
      "down strand, bend opened on the right, straightens", ctx.eval(z4, 1),
      id_down));
  return rep;
}

DiagramExpr random_valid_diagram(int source, int max_len, int max_rows,
                                 std::mt19937_64& rng) {
  const int start_len =
      static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_len) + 1));
  SignWord cur = unique_valid_word(start_len, source);
  DiagramExpr expr = DiagramExpr::identity(cur);
  const int rows =
      1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_rows)));
  for (int r = 0; r < rows; ++r) {
    const std::vector<int> labels = cur.gap_labels(source);
    std::vector<DiagramExpr> factors;
    int pos = 0;
    int top_len = static_cast<int>(cur.size());
    const int l = static_cast<int>(cur.size());
    while (true) {
      enum Opt { kAdvance, kCap, kCupFit, kCupMis, kEnd };
      std::vector<Opt> options;
      if (pos < l) {
        options.push_back(kAdvance);
        options.push_back(kAdvance);
      }
      if (pos + 2 <= l && cur.at(pos) != cur.at(pos + 1)) {
        options.push_back(kCap);
        options.push_back(kCap);
      }
      if (top_len + 2 <= max_len) {
        options.push_back(kCupFit);
        options.push_back(kCupFit);
        options.push_back(kCupMis);
      }
      if (pos == l) {
        options.push_back(kEnd);
        options.push_back(kEnd);
        options.push_back(kEnd);
      }
      const Opt pick =
          options[draw(rng, static_cast<std::uint64_t>(options.size()))];
      if (pick == kEnd) break;
      switch (pick) {
        case kAdvance:
          factors.push_back(
              DiagramExpr::identity(cur.subword(
                  static_cast<std::size_t>(pos), 1)));
          ++pos;
          break;
        case kCap:
          factors.push_back(DiagramExpr::cap(cur.at(pos), cur.at(pos + 1)));
          pos += 2;
          top_len -= 2;
          break;
        case kCupFit: {
          // Open the pair whose inside label stays admissible here.
          const int lab = labels[static_cast<std::size_t>(pos)];
          factors.push_back(lab == 0 ? DiagramExpr::cup(-1, 1)
                                     : DiagramExpr::cup(1, -1));
          top_len += 2;
          break;
        }
        case kCupMis: {
          // Occasionally open the other pair to exercise vanishing paths.
          const int lab = labels[static_cast<std::size_t>(pos)];
          factors.push_back(lab == 0 ? DiagramExpr::cup(1, -1)
                                     : DiagramExpr::cup(-1, 1));
          top_len += 2;
          break;
        }
        case kEnd:
          break;
      }
    }
    DiagramExpr row = DiagramExpr::identity(cur);
    if (!factors.empty()) {
      row = factors.front();
      for (std::size_t i = 1; i < factors.size(); ++i)
        row = DiagramExpr::tensor(row, factors[i]);
    }
    expr = DiagramExpr::compose(expr, row);
    cur = expr.top();
  }
  return expr;
}

DiagramExpr random_crossing_diagram(int max_len, int max_rows,
                                    std::mt19937_64& rng) {
  for (;;) {
    const int start_len =
        2 + static_cast<int>(
                draw(rng, static_cast<std::uint64_t>(std::max(1, max_len - 1))));
    std::vector<std::int8_t> letters(static_cast<std::size_t>(start_len));
    for (auto& letter : letters)
      letter = static_cast<std::int8_t>(draw(rng, 2) ? 1 : -1);
    SignWord cur{std::move(letters)};
    DiagramExpr expr = DiagramExpr::identity(cur);
    bool has_crossing = false;
    const int rows =
        1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_rows)));
    for (int r = 0; r < rows; ++r) {
      std::vector<DiagramExpr> factors;
      int pos = 0;
      int top_len = static_cast<int>(cur.size());
      const int l = static_cast<int>(cur.size());
      while (true) {
        enum Opt { kAdvance, kCap, kCross, kCup, kEnd };
        std::vector<Opt> options;
        if (pos < l) options.push_back(kAdvance);
        if (pos + 2 <= l) {
          options.push_back(kCross);
          options.push_back(kCross);
          if (cur.at(pos) != cur.at(pos + 1)) options.push_back(kCap);
        }
        if (top_len + 2 <= max_len) options.push_back(kCup);
        if (pos == l) {
          options.push_back(kEnd);
          options.push_back(kEnd);
        }
        const Opt pick =
            options[draw(rng, static_cast<std::uint64_t>(options.size()))];
        if (pick == kEnd) break;
        switch (pick) {
          case kAdvance:
            factors.push_back(DiagramExpr::identity(
                cur.subword(static_cast<std::size_t>(pos), 1)));
            ++pos;
            break;
          case kCap:
            factors.push_back(DiagramExpr::cap(cur.at(pos), cur.at(pos + 1)));
            pos += 2;
            top_len -= 2;
            break;
          case kCross:
            factors.push_back(
                DiagramExpr::crossing(cur.at(pos), cur.at(pos + 1)));
            pos += 2;
            has_crossing = true;
            break;
          case kCup:
            factors.push_back(draw(rng, 2) ? DiagramExpr::cup(1, -1)
                                           : DiagramExpr::cup(-1, 1));
            top_len += 2;
            break;
          case kEnd:
            break;
        }
      }
      DiagramExpr row = DiagramExpr::identity(cur);
      if (!factors.empty()) {
        row = factors.front();
        for (std::size_t i = 1; i < factors.size(); ++i)
          row = DiagramExpr::tensor(row, factors[i]);
      }
      expr = DiagramExpr::compose(expr, row);
      cur = expr.top();
    }
    if (has_crossing) return expr;
  }
}

Report verify_soundness(int n, int samples, int max_len, std::uint64_t seed) {
  Report rep;
  rep.suite = "soundness";
  rep.n = n;
  const RepContext ctx(n);
  std::mt19937_64 rng(seed);
  int mismatches = 0;
  int nonzero = 0;
  for (int i = 0; i < samples; ++i) {
    const int source = static_cast<int>(draw(rng, 2));
    const DiagramExpr expr = random_valid_diagram(source, max_len, 3, rng);
    const RatMatrix lhs = ctx.eval(expr, source);
    const Morphism nf = normalize(expr, source);
    const RatMatrix rhs = ctx.eval(nf);
    if (!same_matrix(lhs, rhs)) ++mismatches;
    if (!nf.is_zero()) ++nonzero;
  }
  CheckResult c;
  c.name = "random diagrams evaluate like their normal forms";
  c.pass = mismatches == 0;
  std::ostringstream os;
  os << samples << " samples (" << nonzero << " nonzero), " << mismatches
     << " mismatches";
  c.detail = os.str();
  rep.checks.push_back(std::move(c));
  return rep;
}

Report verify_pairing_sweep(int max_len) {
  Report rep;
  rep.suite = "sweep";
  const std::vector<SignWord> words = all_words_up_to(max_len);
  long long pairs = 0;
  long long mismatches = 0;
  for (const SignWord& a : words)
    for (const SignWord& b : words) {
      const int got = hom_dim(a, b, 0);
      const int want = inner_product(a, b);
      ++pairs;
      if (got != want) ++mismatches;
    }
  CheckResult c;
  c.name = "pairing table at base 0 matches the occupation model";
  c.pass = mismatches == 0;
  std::ostringstream os;
  os << pairs << " pairs, " << mismatches << " mismatches";
  c.detail = os.str();
  rep.checks.push_back(std::move(c));
  return rep;
}

Report verify_crossing_vanishing(int samples, int max_len,
                                 std::uint64_t seed) {
  Report rep;
  rep.suite = "crossing";
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int i = 0; i < samples; ++i) {
    const DiagramExpr expr = random_crossing_diagram(max_len, 3, rng);
    const bool ok = normalize(expr).is_zero() &&
                    normalize(expr, 0).is_zero() &&
                    normalize(expr, 1).is_zero();
    if (!ok) ++failures;
  }
  CheckResult c;
  c.name = "expressions containing a crossing normalize to zero";
  c.pass = failures == 0;
  std::ostringstream os;
  os << samples << " samples, " << failures << " nonzero";
  c.detail = os.str();
  rep.checks.push_back(std::move(c));
  return rep;
}

Report verify_word_reduction(int max_len) {
  Report rep;
  rep.suite = "word-reduction";
  const std::vector<SignWord> words = all_words_up_to(max_len);
  long long failures = 0;
  for (const SignWord& w : words) {
    const WordReduction red = reduce_word(w);
    bool ok = red.atom == atom_of_word(w);
    ok = ok && red.down.bottom() == w && red.down.top() == red.atom_word;
    ok = ok && red.up.bottom() == red.atom_word && red.up.top() == w;
    ok = ok &&
         equal_morphisms(
             normalize(DiagramExpr::compose(red.down, red.up)),
             normalize(DiagramExpr::identity(w)));
    ok = ok &&
         equal_morphisms(
             normalize(DiagramExpr::compose(red.up, red.down)),
             normalize(DiagramExpr::identity(red.atom_word)));
    if (!ok) ++failures;
  }
  CheckResult c;
  c.name = "every word folds onto its atom with invertible witnesses";
  c.pass = failures == 0;
  std::ostringstream os;
  os << words.size() << " words, " << failures << " failures";
  c.detail = os.str();
  rep.checks.push_back(std::move(c));
  return rep;
}

Report verify_normal_order(int max_len) {
  Report rep;
  rep.suite = "normal-order";
  const std::vector<SignWord> words = all_words_up_to(max_len);
  long long mismatches = 0;
  for (const SignWord& w : words) {
    const NormalForm nf = normal_order(w);
    const Mat2 lhs = nf.matrix();
    const Mat2 rhs = matrix_rep(w);
    bool ok = true;
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col)
        if (!(lhs(r, col) == rhs(r, col))) ok = false;
    if (!ok) ++mismatches;
  }
  {
    CheckResult c;
    c.name = "rewriting into ordered form matches the occupation matrices";
    c.pass = mismatches == 0;
    std::ostringstream os;
    os << words.size() << " words, " << mismatches << " mismatches";
    c.detail = os.str();
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "energy at occupation 0 is -1/2";
    c.pass = hamiltonian_eigenvalue(0) == Rational(-1, 2);
    c.detail = hamiltonian_eigenvalue(0).str();
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "energy at occupation 1 is +1/2";
    c.pass = hamiltonian_eigenvalue(1) == Rational(1, 2);
    c.detail = hamiltonian_eigenvalue(1).str();
    rep.checks.push_back(std::move(c));
  }
  {
    // The energy operator is the occupation count shifted by one half; its
    // matrix is diagonal with exactly the two levels above.
    Mat2 h = matrix_rep(SignWord::from_string("+-"));
    h(0, 0) -= Rational(1, 2);
    h(1, 1) -= Rational(1, 2);
    const bool diag = h(0, 1).is_zero() && h(1, 0).is_zero();
    CheckResult c;
    c.name = "energy operator is diagonal with the two levels";
    c.pass = diag && h(0, 0) == Rational(-1, 2) && h(1, 1) == Rational(1, 2);
    c.detail = "entries " + h(0, 0).str() + ", " + h(1, 1).str();
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

Report verify_dimension_table(int n, int max_len) {
  Report rep;
  rep.suite = "dimension-table";
  rep.n = n;
  const RepContext ctx(n);
  const std::vector<SignWord> words = all_words_up_to(max_len);
  long long mismatches = 0;
  long long spaces = 0;
  for (const SignWord& w : words)
    for (int s = 0; s < 2; ++s) {
      const auto& sp = ctx.word_space(w, s);
      ++spaces;
      if (!w.valid_from(s)) {
        if (sp.dim != 0) ++mismatches;
        continue;
      }
      const int t = w.target_from(s);
      const int want = (s == 1 ? n : 1) * (t == 1 ? n : 1);
      if (sp.dim != want) {
        ++mismatches;
        continue;
      }
      if (!same_matrix(sp.proj * sp.sect,
                       RatMatrix::Identity(sp.dim, sp.dim)))
        ++mismatches;
    }
  CheckResult c;
  c.name = "quotient dimensions follow the base labels of the two ends";
  c.pass = mismatches == 0;
  std::ostringstream os;
  os << spaces << " spaces, " << mismatches << " mismatches";
  c.detail = os.str();
  rep.checks.push_back(std::move(c));
  return rep;
}

}  // namespace fermicat
