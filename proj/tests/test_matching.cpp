#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fermicat/matching.hpp"
#include "fermicat/sign_word.hpp"

using fermicat::Endpoint;
using fermicat::PlanarMatching;
using fermicat::SignWord;

namespace {

SignWord W(const char* s) { return SignWord::from_string(s); }

Endpoint B(int position) { return {Endpoint::Side::Bottom, position}; }
Endpoint T(int position) { return {Endpoint::Side::Top, position}; }

using Arc = std::pair<Endpoint, Endpoint>;

std::vector<SignWord> words_up_to(int max_len) {
  std::vector<SignWord> out;
  for (int len = 0; len <= max_len; ++len)
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      std::vector<std::int8_t> letters(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i)
        letters[static_cast<std::size_t>(i)] =
            static_cast<std::int8_t>(((mask >> i) & 1u) ? 1 : -1);
      out.emplace_back(std::move(letters));
    }
  return out;
}

// Independent existence oracle. The boundary points, read once around the
// strip (bottom left to right, then top right to left with flipped signs),
// must admit a noncrossing pairing of opposite values. Classic recursion:
// pair the first point with some opposite later point and split the rest
// into the inside and outside segments.
bool segment_pairable(const std::vector<int>& cycle, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return true;
  if ((hi - lo) % 2 != 0) return false;
  for (std::size_t j = lo + 1; j < hi; j += 2) {
    if (cycle[lo] != cycle[j] && segment_pairable(cycle, lo + 1, j) &&
        segment_pairable(cycle, j + 1, hi)) {
      return true;
    }
  }
  return false;
}

bool matching_exists_oracle(const SignWord& bottom, const SignWord& top) {
  std::vector<int> cycle;
  for (std::size_t i = 0; i < bottom.size(); ++i) cycle.push_back(bottom.at(i));
  for (std::size_t j = top.size(); j > 0; --j) cycle.push_back(-top.at(j - 1));
  return segment_pairable(cycle, 0, cycle.size());
}

}  // namespace

TEST_CASE("identity matching joins equal positions straight through") {
  const PlanarMatching m = PlanarMatching::identity(W("+-"));
  CHECK(m.bottom() == W("+-"));
  CHECK(m.top() == W("+-"));
  const std::vector<Arc> want = {{B(1), T(1)}, {B(2), T(2)}};
  CHECK(m.arcs() == want);
  CHECK(m.sign_valid());
  CHECK(m.planar());
}

TEST_CASE("normal-form matching on pinned word pairs") {
  SUBCASE("equal words give the identity") {
    CHECK(PlanarMatching::canonical(W("-+"), W("-+")) == PlanarMatching::identity(W("-+")));
    // even repeated-letter words pair with themselves through the identity
    CHECK(PlanarMatching::canonical(W("++"), W("++")) == PlanarMatching::identity(W("++")));
  }
  SUBCASE("one fold on the bottom") {
    const PlanarMatching m = PlanarMatching::canonical(W("+-+"), W("+"));
    CHECK(m == PlanarMatching(W("+-+"), W("+"), {{B(2), B(3)}, {B(1), T(1)}}));
  }
  SUBCASE("fold on the top only") {
    const PlanarMatching m = PlanarMatching::canonical(W(""), W("-+"));
    CHECK(m == PlanarMatching(W(""), W("-+"), {{T(1), T(2)}}));
  }
  SUBCASE("folds on both sides") {
    const PlanarMatching m = PlanarMatching::canonical(W("-+"), W("+-"));
    CHECK(m == PlanarMatching(W("-+"), W("+-"), {{B(1), B(2)}, {T(1), T(2)}}));
  }
  SUBCASE("rightmost pair folds first") {
    // both (1,2) and (2,3) are opposite pairs; the fold must take (2,3)
    const PlanarMatching m = PlanarMatching::canonical(W("-+-"), W("-"));
    CHECK(m == PlanarMatching(W("-+-"), W("-"), {{B(2), B(3)}, {B(1), T(1)}}));
  }
  SUBCASE("impossible pairs throw") {
    CHECK_THROWS_AS(PlanarMatching::canonical(W("+"), W("-")), std::invalid_argument);
    CHECK_THROWS_AS(PlanarMatching::canonical(W("+"), W("")), std::invalid_argument);
    CHECK_THROWS_AS(PlanarMatching::canonical(W("++"), W("")), std::invalid_argument);
    CHECK_THROWS_AS(PlanarMatching::canonical(W("++"), W("--")), std::invalid_argument);
  }
}

TEST_CASE("orientation rules on hand-built matchings") {
  // a turning strand must join opposite letters
  CHECK(PlanarMatching(W("+-"), W(""), {{B(1), B(2)}}).sign_valid());
  CHECK_FALSE(PlanarMatching(W("++"), W(""), {{B(1), B(2)}}).sign_valid());
  // a through strand must keep its letter
  CHECK(PlanarMatching(W("+"), W("+"), {{B(1), T(1)}}).sign_valid());
  CHECK_FALSE(PlanarMatching(W("+"), W("-"), {{B(1), T(1)}}).sign_valid());
}

TEST_CASE("crossing detection on hand-built matchings") {
  const SignWord w = W("++--");
  const PlanarMatching nested(w, W(""), {{B(1), B(4)}, {B(2), B(3)}});
  CHECK(nested.sign_valid());
  CHECK(nested.planar());
  const PlanarMatching crossed(w, W(""), {{B(1), B(3)}, {B(2), B(4)}});
  CHECK(crossed.sign_valid());
  CHECK_FALSE(crossed.planar());
}

TEST_CASE("existence test on pinned pairs") {
  CHECK(fermicat::matching_exists(W(""), W("")));
  CHECK(fermicat::matching_exists(W("+"), W("+")));
  CHECK(fermicat::matching_exists(W("+-"), W("")));
  CHECK(fermicat::matching_exists(W("+"), W("++-")));
  CHECK_FALSE(fermicat::matching_exists(W("+"), W("-")));
  CHECK_FALSE(fermicat::matching_exists(W("+"), W("")));
  CHECK_FALSE(fermicat::matching_exists(W("++"), W("")));
}

TEST_CASE("existence test agrees with the recursive pairing oracle") {
  const std::vector<SignWord> words = words_up_to(4);
  for (const SignWord& bottom : words)
    for (const SignWord& top : words) {
      CHECK(fermicat::matching_exists(bottom, top) == matching_exists_oracle(bottom, top));
    }
}

TEST_CASE("normal form exists exactly when a pairing exists, and is valid") {
  const std::vector<SignWord> words = words_up_to(4);
  for (const SignWord& bottom : words)
    for (const SignWord& top : words) {
      if (fermicat::matching_exists(bottom, top)) {
        const PlanarMatching m = PlanarMatching::canonical(bottom, top);
        CHECK(m.bottom() == bottom);
        CHECK(m.top() == top);
        CHECK(m.sign_valid());
        CHECK(m.planar());
        CHECK(m.arcs().size() * 2 == bottom.size() + top.size());
      } else {
        CHECK_THROWS_AS(PlanarMatching::canonical(bottom, top), std::invalid_argument);
      }
    }
}
