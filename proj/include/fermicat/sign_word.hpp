#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fermicat {

// Raised by SignWord::from_string; `position` is 1-based and points at the
// offending character.
struct WordParseError : std::runtime_error {
  WordParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message), position(position) {}
  std::size_t position;
};

// A finite word over the alphabet {+, -}. '+' stands for a creation strand
// (oriented upward), '-' for an annihilation strand (oriented downward). The
// rightmost letter acts first when the word is read as an operator product.
class SignWord {
 public:
  SignWord() = default;
  explicit SignWord(std::vector<std::int8_t> letters) : letters_(std::move(letters)) {}

  // Accepts only '+' and '-' characters; rejects anything else with a 1-based
  // error position. The empty string parses to the empty word.
  static SignWord from_string(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Letter at 0-based index, as +1 / -1.
  int at(std::size_t index) const { return letters_.at(index); }

  std::string str() const;

  SignWord prepended(int sign) const;
  SignWord appended(int sign) const;
  SignWord concat(const SignWord& rhs) const;
  SignWord subword(std::size_t begin, std::size_t count) const;

  int letter_sum() const;

  // Region labels of the gaps between letters, right to left: result[g] is
  // the label of the gap with `g` letters to its left, so result[size()] is
  // the rightmost region (= `rightmost`) and result[0] the leftmost. Crossing
  // an upward strand right-to-left raises the label by 1, a downward strand
  // lowers it by 1.
  std::vector<int> gap_labels(int rightmost) const;

  // True when every gap label stays inside {0,1} with the rightmost region
  // labelled `source`. Exactly the words whose operator product does not
  // annihilate the basis state |source>.
  bool valid_from(int source) const;

  // source + sum of letters; the label of the leftmost region.
  int target_from(int source) const { return source + letter_sum(); }

  // True when the word contains "++" or "--" (and hence is valid from no
  // source at all).
  bool has_equal_adjacent_pair() const;

  friend bool operator==(const SignWord&, const SignWord&) = default;
  friend std::strong_ordering operator<=>(const SignWord&, const SignWord&) = default;

 private:
  std::vector<std::int8_t> letters_;
};

}  // namespace fermicat
