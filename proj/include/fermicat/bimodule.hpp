#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "fermicat/diagram.hpp"
#include "fermicat/linalg.hpp"
#include "fermicat/morphism.hpp"
#include "fermicat/normalize.hpp"
#include "fermicat/sign_word.hpp"

namespace fermicat {

// Concrete matrix model of the strand calculus at a size n >= 2: label 0
// carries the scalars, label 1 the n-by-n matrix ring; an upward strand
// carries the column bimodule, a downward strand the row bimodule. A word's
// space is the tensor product of its strand spaces modulo the relations of
// the matrix-ring junctions, and diagrams evaluate to exact rational
// matrices between those quotients.
class RepContext {
 public:
  // Throws std::invalid_argument for n < 2 (n = 1 would merge the two
  // labels and the model degenerates).
  explicit RepContext(int n);

  int n() const { return n_; }

  struct Space {
    int dim = 0;      // quotient dimension
    int ambient = 0;  // plain tensor dimension before the junction relations
    RatMatrix proj;   // dim x ambient
    RatMatrix sect;   // ambient x dim, proj * sect == identity
  };

  // Quotient space of a word based at `source`; a 0-dimensional space when
  // the word admits no region labelling from that source.
  const Space& word_space(const SignWord& word, int source) const;

  // Which neighbor swallows the matrix produced by a mid-word downward turn
  // of a "+-" pair. Both choices give the same quotient-level map; the knob
  // exists so tests can pin that fact.
  enum class AbsorbSide { PreferLeft, PreferRight };

  // Quotient-level matrix of a diagram: word_space(top).dim rows by
  // word_space(bottom).dim columns. Crossings and invalid interface words
  // give the zero map.
  RatMatrix eval(const DiagramExpr& expr, int source,
                 AbsorbSide side = AbsorbSide::PreferLeft) const;

  // Evaluation of a normal form with a pinned source.
  RatMatrix eval(const Morphism& morphism) const;

  // Ambient matrices of the four U-turns on a single pair (exposed for
  // reports and tests): close maps the pair space onto the empty-word space,
  // open is the reverse insertion.
  RatMatrix close_pair_ambient(int left_sign, int right_sign) const;
  RatMatrix open_pair_ambient(int left_sign, int right_sign) const;

 private:
  Space build_word_space(const SignWord& word, int source) const;

  int n_;
  mutable std::map<std::pair<std::string, int>, Space> cache_;
};

// Rows spanning the junction relations of a "-+" pair on its n^2 tensor
// coordinates; the rank is n^2 - 1.
RatMatrix pair_junction_relations(int n);

}  // namespace fermicat
