#include "fermicat/sign_word.hpp"

#include <numeric>

namespace fermicat {

SignWord SignWord::from_string(std::string_view text) {
  std::vector<std::int8_t> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+') {
      letters.push_back(1);
    } else if (c == '-') {
      letters.push_back(-1);
    } else {
      throw WordParseError(i + 1, "invalid sign character '" + std::string(1, c) +
                                      "' at position " + std::to_string(i + 1));
    }
  }
  return SignWord(std::move(letters));
}

std::string SignWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (const auto letter : letters_) {
    out.push_back(letter > 0 ? '+' : '-');
  }
  return out;
}

SignWord SignWord::prepended(int sign) const {
  std::vector<std::int8_t> letters;
  letters.reserve(letters_.size() + 1);
  letters.push_back(static_cast<std::int8_t>(sign));
  letters.insert(letters.end(), letters_.begin(), letters_.end());
  return SignWord(std::move(letters));
}

SignWord SignWord::appended(int sign) const {
  std::vector<std::int8_t> letters = letters_;
  letters.push_back(static_cast<std::int8_t>(sign));
  return SignWord(std::move(letters));
}

SignWord SignWord::concat(const SignWord& rhs) const {
  std::vector<std::int8_t> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return SignWord(std::move(letters));
}

SignWord SignWord::subword(std::size_t begin, std::size_t count) const {
  std::vector<std::int8_t> letters(letters_.begin() + begin, letters_.begin() + begin + count);
  return SignWord(std::move(letters));
}

int SignWord::letter_sum() const {
  return std::accumulate(letters_.begin(), letters_.end(), 0);
}

std::vector<int> SignWord::gap_labels(int rightmost) const {
  std::vector<int> labels(letters_.size() + 1);
  labels[letters_.size()] = rightmost;
  for (std::size_t g = letters_.size(); g > 0; --g) {
    labels[g - 1] = labels[g] + letters_[g - 1];
  }
  return labels;
}

bool SignWord::valid_from(int source) const {
  int label = source;
  if (label != 0 && label != 1) {
    return false;
  }
  for (std::size_t g = letters_.size(); g > 0; --g) {
    label += letters_[g - 1];
    if (label != 0 && label != 1) {
      return false;
    }
  }
  return true;
}

bool SignWord::has_equal_adjacent_pair() const {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    if (letters_[i] == letters_[i + 1]) {
      return true;
    }
  }
  return false;
}

}  // namespace fermicat
