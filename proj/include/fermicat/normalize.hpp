#pragma once

#include <optional>
#include <vector>

#include "fermicat/diagram.hpp"
#include "fermicat/morphism.hpp"

namespace fermicat {

// One generator placed in a full-width slice.
struct Tile {
  DiagramExpr::Kind kind;  // Identity, Cap, Cup or Crossing
  SignWord word;           // identity word, or the two signs of the generator
};

// A full-width horizontal slice of a diagram.
struct SliceRow {
  std::vector<Tile> tiles;
  SignWord bottom;
  SignWord top;
};

// Rewrites an expression as a stack of full-width slices, bottom to top.
// Horizontal juxtaposition pads the shorter side with identity slices, which
// is harmless by the interchange law.
std::vector<SliceRow> flatten_to_rows(const DiagramExpr& expr);

// Rewrites the diagram to its normal form: the zero map, or a single planar
// matching with coefficient 1 (plus a formal bubble multiset for loop-only
// diagrams with no boundary and no region pin).
//
// The engine composes the slices in order and tracks every region label that
// occurs along the way (the labels of the gaps of every interface word,
// relative to the unbounded region on the right). A term survives only if all
// labels fit in a window of two consecutive values; with a source given, the
// window must be exactly {0,1} with the rightmost region at `source`. Closed
// loops formed during composition evaluate to 1 whenever the term survives,
// except that loop-only endomorphisms of the empty boundary without a source
// keep their loops as a formal multiset.
Morphism normalize(const DiagramExpr& expr, std::optional<int> source = std::nullopt);

// Fixed-point form of the above for already-computed results.
Morphism normalize(const Morphism& morphism);

// Dimension of the space of diagrams between the two words with the given
// label of the rightmost region: 1 when both words admit the labelling and an
// orientation-consistent crossing-free pairing exists, else 0.
int hom_dim(const SignWord& bottom, const SignWord& top, int source);

// A stack of cap, identity and cup slices whose normal form is the given
// matching: caps close the bottom turns innermost first, through strands pass
// straight up, cups open the top turns.
DiagramExpr matching_to_expr(const PlanarMatching& matching);

}  // namespace fermicat
