#include "fermicat/lang.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <vector>

namespace fermicat {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DiagramExpr parse_diagram_all() {
    skip_ws();
    DiagramExpr e = parse_expr();
    skip_ws();
    require_end();
    return e;
  }

  SignWord parse_word_all() {
    skip_ws();
    SignWord w = parse_word_token();
    skip_ws();
    require_end();
    return w;
  }

 private:
  DiagramExpr parse_expr() {
    DiagramExpr acc = parse_term();
    skip_ws();
    while (peek() == ';') {
      ++pos_;
      skip_ws();
      const std::size_t term_start = pos_;
      DiagramExpr upper = parse_term();
      const SourceSpan upper_span{term_start, pos_};
      try {
        acc = DiagramExpr::compose(std::move(acc), std::move(upper));
      } catch (const BoundaryMismatchError& err) {
        throw ParseError(err.what(), upper_span);
      }
      skip_ws();
    }
    return acc;
  }

  DiagramExpr parse_term() {
    DiagramExpr acc = parse_factor();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      DiagramExpr factor = parse_factor();
      acc = DiagramExpr::tensor(std::move(acc), std::move(factor));
      skip_ws();
    }
    return acc;
  }

  DiagramExpr parse_factor() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("expected a generator or '('", {pos_, pos_});
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      DiagramExpr inner = parse_expr();
      skip_ws();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t name_start = pos_;
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      const std::string name(text_.substr(name_start, pos_ - name_start));
      const SourceSpan name_span{name_start, pos_};
      if (name != "id" && name != "cap" && name != "cup" && name != "x")
        throw ParseError("unknown generator '" + name + "'", name_span);
      skip_ws();
      expect('(');
      skip_ws();
      if (name == "id") {
        SignWord w = parse_word_token();
        skip_ws();
        expect(')');
        return DiagramExpr::identity(std::move(w));
      }
      const std::size_t pair_start = pos_;
      const int left = parse_sign();
      skip_ws();
      const int right = parse_sign();
      const SourceSpan pair_span{pair_start, pos_};
      skip_ws();
      expect(')');
      try {
        if (name == "cap") return DiagramExpr::cap(left, right);
        if (name == "cup") return DiagramExpr::cup(left, right);
        return DiagramExpr::crossing(left, right);
      } catch (const OrientationMismatchError& err) {
        throw ParseError(err.what(), pair_span);
      }
    }
    throw ParseError(std::string("expected a generator or '(', got '") + c +
                         "'",
                     {pos_, pos_ + 1});
  }

  SignWord parse_word_token() {
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      return SignWord(std::vector<std::int8_t>{});
    }
    std::vector<std::int8_t> letters;
    while (pos_ < text_.size() &&
           (text_[pos_] == '+' || text_[pos_] == '-')) {
      letters.push_back(static_cast<std::int8_t>(text_[pos_] == '+' ? 1 : -1));
      ++pos_;
    }
    if (letters.empty())
      throw ParseError("expected a sign word: '1' or letters '+'/'-'",
                       {pos_, std::min(pos_ + 1, text_.size())});
    return SignWord(std::move(letters));
  }

  int parse_sign() {
    if (pos_ >= text_.size() ||
        (text_[pos_] != '+' && text_[pos_] != '-'))
      throw ParseError("expected '+' or '-'",
                       {pos_, std::min(pos_ + 1, text_.size())});
    const int sign = text_[pos_] == '+' ? 1 : -1;
    ++pos_;
    return sign;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'",
                       {pos_, std::min(pos_ + 1, text_.size())});
    ++pos_;
  }

  void require_end() {
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input",
                       {pos_, std::min(pos_ + 1, text_.size())});
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_expr(const DiagramExpr& e, bool inside_tensor, std::string& out) {
  switch (e.kind()) {
    case DiagramExpr::Kind::Identity:
      out += "id(";
      out += e.generator_word().empty() ? "1" : e.generator_word().str();
      out += ")";
      return;
    case DiagramExpr::Kind::Cap:
      out += "cap(" + e.generator_word().str() + ")";
      return;
    case DiagramExpr::Kind::Cup:
      out += "cup(" + e.generator_word().str() + ")";
      return;
    case DiagramExpr::Kind::Crossing:
      out += "x(" + e.generator_word().str() + ")";
      return;
    case DiagramExpr::Kind::Compose:
      if (inside_tensor) out += "(";
      print_expr(e.first(), false, out);
      out += " ; ";
      print_expr(e.second(), false, out);
      if (inside_tensor) out += ")";
      return;
    case DiagramExpr::Kind::Tensor:
      print_expr(e.first(), true, out);
      out += " * ";
      print_expr(e.second(), true, out);
      return;
  }
}

std::string spaced_word(const SignWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s += w.at(i) > 0 ? '+' : '-';
    if (i + 1 < w.size()) s += ' ';
  }
  return s;
}

std::string marker_row(const std::vector<char>& markers) {
  std::string s;
  for (std::size_t i = 0; i < markers.size(); ++i) {
    s += markers[i];
    if (i + 1 < markers.size()) s += ' ';
  }
  return s;
}

std::string loops_note(const BubbleCount& b) {
  std::string s;
  if (b.clockwise > 0)
    s += std::to_string(b.clockwise) + " cw";
  if (b.counterclockwise > 0) {
    if (!s.empty()) s += ", ";
    s += std::to_string(b.counterclockwise) + " ccw";
  }
  return s;
}

}  // namespace

SignWord parse_word(std::string_view text) {
  return Parser(text).parse_word_all();
}

DiagramExpr parse_diagram(std::string_view text) {
  return Parser(text).parse_diagram_all();
}

std::string pretty_print(const DiagramExpr& expr) {
  std::string out;
  print_expr(expr, false, out);
  return out;
}

std::string render_ascii(const Morphism& morphism) {
  if (morphism.is_zero()) return "0";
  if (morphism.bottom().empty() && morphism.top().empty()) {
    // Scalar endomorphisms of the empty word print as a sum of coefficients,
    // each with its residual loop counts.
    std::string out;
    bool first = true;
    for (const MorphismTerm& term : morphism.terms()) {
      if (!first) out += " + ";
      first = false;
      out += term.coeff.str();
      const std::string note = loops_note(term.bubbles);
      if (!note.empty()) out += " [" + note + "]";
    }
    return out;
  }

  std::string out;
  bool first = true;
  for (const MorphismTerm& term : morphism.terms()) {
    if (!first) out += "+\n";
    first = false;
    const PlanarMatching& mat = term.matching;
    std::vector<char> brow(mat.bottom().size(), '|');
    std::vector<char> trow(mat.top().size(), '|');
    for (const auto& arc : mat.arcs()) {
      const Endpoint& a = arc.first;
      const Endpoint& b = arc.second;
      if (a.side == Endpoint::Side::Bottom &&
          b.side == Endpoint::Side::Bottom) {
        const int lo = std::min(a.position, b.position);
        const int hi = std::max(a.position, b.position);
        brow[static_cast<std::size_t>(lo - 1)] = '(';
        brow[static_cast<std::size_t>(hi - 1)] = ')';
      } else if (a.side == Endpoint::Side::Top &&
                 b.side == Endpoint::Side::Top) {
        const int lo = std::min(a.position, b.position);
        const int hi = std::max(a.position, b.position);
        trow[static_cast<std::size_t>(lo - 1)] = '(';
        trow[static_cast<std::size_t>(hi - 1)] = ')';
      }
    }
    out += "top     " + spaced_word(mat.top()) + "\n";
    out += "        " + marker_row(trow) + "\n";
    out += "        " + marker_row(brow) + "\n";
    out += "bottom  " + spaced_word(mat.bottom()) + "\n";
    out += "coeff   " + term.coeff.str();
    const std::string note = loops_note(term.bubbles);
    if (!note.empty()) out += "   loops: " + note;
    out += "\n";
  }
  return out;
}

}  // namespace fermicat
