#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fermicat/diagram.hpp"
#include "fermicat/sign_word.hpp"

namespace fermicat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  int n = 0;  // matrix size when the suite uses one, else 0
  std::vector<CheckResult> checks;
  bool all_pass() const;
  int passed() const;
};

// The two U-turn pairs split the empty word into its two period-two pieces:
// five exact identities, each checked unlabeled and at both base labels.
Report verify_direct_sum();

// The pairing matrix of the two canonical state presentations is the 2x2
// identity.
Report verify_state_pairing();

// In the matrix model of size n: closing after opening (and the reverse) is
// the identity for both U-turn pairs.
Report verify_adjunctions(int n);

// Dropping the 1/n in the "-+" opening makes the close-open composite
// n times the identity; the model detects the wrong normalization.
Report verify_negative_control(int n);

// The four bent-strand composites straighten to identity maps.
Report verify_zigzags(int n);

// Seeded random label-valid diagrams evaluate to the same matrix as their
// normal forms.
Report verify_soundness(int n, int samples, int max_len, std::uint64_t seed);

// Pairing dimensions of all word pairs up to max_len against the occupation
// model at base 0.
Report verify_pairing_sweep(int max_len);

// Seeded random expressions containing at least one crossing normalize to
// zero, unlabeled and at both base labels.
Report verify_crossing_vanishing(int samples, int max_len, std::uint64_t seed);

// Every word up to max_len folds onto its atom with witnesses whose two
// composites normalize to identity normal forms.
Report verify_word_reduction(int max_len);

// Rewriting into normal order agrees with the 2x2 occupation matrices for
// every word up to max_len, and the energy operator has the two half-integer
// levels.
Report verify_normal_order(int max_len);

// Quotient dimensions in the matrix model follow the base labels of the two
// ends: 1, n, n, n^2 for (0,0), (0,1), (1,0), (1,1).
Report verify_dimension_table(int n, int max_len);

// Deterministic helpers shared by the suites and the tests.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);
SignWord unique_valid_word(int length, int source);
std::vector<SignWord> all_words_up_to(int max_len);
DiagramExpr random_valid_diagram(int source, int max_len, int max_rows,
                                 std::mt19937_64& rng);
DiagramExpr random_crossing_diagram(int max_len, int max_rows,
                                    std::mt19937_64& rng);

}  // namespace fermicat
