#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fermicat/diagram.hpp"
#include "fermicat/morphism.hpp"
#include "fermicat/sign_word.hpp"

namespace fermicat {

// Byte range [start, end) into the input text of a parse.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

// Any rejection of input text: syntax, a turning generator with equal signs,
// or a stacking whose interface words disagree. The span points at the
// offending bytes.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : std::runtime_error(message), span_(span) {}

  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// A sign word: "1" for the empty word, otherwise letters '+'/'-'.
SignWord parse_word(std::string_view text);

// Grammar:
//   expr   := term (';' term)*     vertical stacking, bottom first
//   term   := factor ('*' factor)* horizontal juxtaposition, left to right
//   factor := 'id(' word ')' | 'cap(' pair ')' | 'cup(' pair ')'
//           | 'x(' pair ')' | '(' expr ')'
// where pair is two signs, opposite for cap/cup. Whitespace is free.
DiagramExpr parse_diagram(std::string_view text);

// Emits the grammar above; parsing the result reproduces the expression up
// to equality of normal forms.
std::string pretty_print(const DiagramExpr& expr);

// Text depiction of a normal form: "0" for zero; scalars print their
// coefficient (with loop counts when present); otherwise one block per term
// with the boundary words, turns as matched brackets, bars for through
// strands, and the coefficient.
std::string render_ascii(const Morphism& morphism);

}  // namespace fermicat
