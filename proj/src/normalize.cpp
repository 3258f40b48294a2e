#include "fermicat/normalize.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace fermicat {

namespace {

std::vector<SliceRow> single_tile_row(DiagramExpr::Kind kind, const SignWord& word,
                                      SignWord bottom, SignWord top) {
  SliceRow row;
  row.tiles.push_back({kind, word});
  row.bottom = std::move(bottom);
  row.top = std::move(top);
  return {row};
}

SliceRow identity_row(const SignWord& word) {
  SliceRow row;
  row.tiles.push_back({DiagramExpr::Kind::Identity, word});
  row.bottom = word;
  row.top = word;
  return row;
}

SliceRow join_rows(const SliceRow& left, const SliceRow& right) {
  SliceRow row;
  row.tiles = left.tiles;
  row.tiles.insert(row.tiles.end(), right.tiles.begin(), right.tiles.end());
  row.bottom = left.bottom.concat(right.bottom);
  row.top = left.top.concat(right.top);
  return row;
}

PlanarMatching row_matching(const SliceRow& row) {
  std::vector<std::pair<Endpoint, Endpoint>> arcs;
  int bottom_at = 0;
  int top_at = 0;
  for (const auto& tile : row.tiles) {
    switch (tile.kind) {
      case DiagramExpr::Kind::Identity:
        for (int i = 1; i <= static_cast<int>(tile.word.size()); ++i) {
          arcs.push_back({Endpoint{Endpoint::Side::Bottom, bottom_at + i},
                          Endpoint{Endpoint::Side::Top, top_at + i}});
        }
        bottom_at += static_cast<int>(tile.word.size());
        top_at += static_cast<int>(tile.word.size());
        break;
      case DiagramExpr::Kind::Cap:
        arcs.push_back({Endpoint{Endpoint::Side::Bottom, bottom_at + 1},
                        Endpoint{Endpoint::Side::Bottom, bottom_at + 2}});
        bottom_at += 2;
        break;
      case DiagramExpr::Kind::Cup:
        arcs.push_back({Endpoint{Endpoint::Side::Top, top_at + 1},
                        Endpoint{Endpoint::Side::Top, top_at + 2}});
        top_at += 2;
        break;
      default:
        throw std::logic_error("crossings cannot be turned into a matching");
    }
  }
  return PlanarMatching(row.bottom, row.top, std::move(arcs));
}

struct LoopRecord {
  int leftmost_interface_position;
};

struct ComposeOutcome {
  PlanarMatching composite;
  std::vector<LoopRecord> loops;
};

// Endpoint-to-partner lookup for one matching.
class LinkTable {
 public:
  explicit LinkTable(const PlanarMatching& m)
      : bottom_(m.bottom().size(), Endpoint{}), top_(m.top().size(), Endpoint{}) {
    for (const auto& [a, b] : m.arcs()) {
      set(a, b);
      set(b, a);
    }
  }

  const Endpoint& partner(const Endpoint& e) const {
    const auto& table = (e.side == Endpoint::Side::Bottom) ? bottom_ : top_;
    return table[static_cast<std::size_t>(e.position) - 1];
  }

 private:
  void set(const Endpoint& from, const Endpoint& to) {
    auto& table = (from.side == Endpoint::Side::Bottom) ? bottom_ : top_;
    table[static_cast<std::size_t>(from.position) - 1] = to;
  }

  std::vector<Endpoint> bottom_;
  std::vector<Endpoint> top_;
};

// Glues `upper` on top of `lower` along their shared interface word. Strand
// pieces are traced through the interface into arcs of the composite;
// interface cycles that touch no outer boundary are returned as loops.
ComposeOutcome compose_matchings(const PlanarMatching& lower, const PlanarMatching& upper) {
  assert(lower.top() == upper.bottom());
  const LinkTable lower_links(lower);
  const LinkTable upper_links(upper);
  const std::size_t interface_size = lower.top().size();

  std::vector<bool> interface_seen(interface_size, false);
  std::vector<std::pair<Endpoint, Endpoint>> arcs;
  std::vector<bool> outer_seen_bottom(lower.bottom().size(), false);
  std::vector<bool> outer_seen_top(upper.top().size(), false);

  // Walks from one outer endpoint through the interface to the opposite end
  // of its strand. `in_lower` says which matching the next hop uses.
  const auto trace = [&](Endpoint start, bool in_lower) -> Endpoint {
    Endpoint at = start;
    bool lower_side = in_lower;
    while (true) {
      const Endpoint next = lower_side ? lower_links.partner(at) : upper_links.partner(at);
      const bool at_interface = lower_side ? (next.side == Endpoint::Side::Top)
                                           : (next.side == Endpoint::Side::Bottom);
      if (!at_interface) {
        return Endpoint{lower_side ? Endpoint::Side::Bottom : Endpoint::Side::Top, next.position};
      }
      interface_seen[static_cast<std::size_t>(next.position) - 1] = true;
      at = Endpoint{lower_side ? Endpoint::Side::Bottom : Endpoint::Side::Top, next.position};
      lower_side = !lower_side;
    }
  };

  for (int i = 1; i <= static_cast<int>(lower.bottom().size()); ++i) {
    if (outer_seen_bottom[static_cast<std::size_t>(i) - 1]) {
      continue;
    }
    const Endpoint start{Endpoint::Side::Bottom, i};
    const Endpoint end = trace(start, true);
    if (end.side == Endpoint::Side::Bottom) {
      outer_seen_bottom[static_cast<std::size_t>(end.position) - 1] = true;
    } else {
      outer_seen_top[static_cast<std::size_t>(end.position) - 1] = true;
    }
    outer_seen_bottom[static_cast<std::size_t>(i) - 1] = true;
    arcs.push_back({start, end});
  }
  for (int j = 1; j <= static_cast<int>(upper.top().size()); ++j) {
    if (outer_seen_top[static_cast<std::size_t>(j) - 1]) {
      continue;
    }
    const Endpoint start{Endpoint::Side::Top, j};
    const Endpoint end = trace(start, false);
    assert(end.side == Endpoint::Side::Top);
    outer_seen_top[static_cast<std::size_t>(end.position) - 1] = true;
    outer_seen_top[static_cast<std::size_t>(j) - 1] = true;
    arcs.push_back({start, end});
  }

  std::vector<LoopRecord> loops;
  for (std::size_t j = 0; j < interface_size; ++j) {
    if (interface_seen[j]) {
      continue;
    }
    // Trace the cycle through alternating hops, starting upward.
    int leftmost = static_cast<int>(j) + 1;
    int at = static_cast<int>(j) + 1;
    bool lower_side = false;
    do {
      const Endpoint next = lower_side
                                ? lower_links.partner(Endpoint{Endpoint::Side::Top, at})
                                : upper_links.partner(Endpoint{Endpoint::Side::Bottom, at});
      assert(lower_side ? (next.side == Endpoint::Side::Top)
                        : (next.side == Endpoint::Side::Bottom));
      at = next.position;
      interface_seen[static_cast<std::size_t>(at) - 1] = true;
      leftmost = std::min(leftmost, at);
      lower_side = !lower_side;
    } while (at != static_cast<int>(j) + 1 || lower_side);
    loops.push_back({leftmost});
  }

  return {PlanarMatching(lower.bottom(), upper.top(), std::move(arcs)), std::move(loops)};
}

bool contains_crossing(const std::vector<SliceRow>& rows) {
  for (const auto& row : rows) {
    for (const auto& tile : row.tiles) {
      if (tile.kind == DiagramExpr::Kind::Crossing) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<SliceRow> flatten_to_rows(const DiagramExpr& expr) {
  switch (expr.kind()) {
    case DiagramExpr::Kind::Identity:
      return single_tile_row(expr.kind(), expr.generator_word(), expr.bottom(), expr.top());
    case DiagramExpr::Kind::Cap:
    case DiagramExpr::Kind::Cup:
    case DiagramExpr::Kind::Crossing:
      return single_tile_row(expr.kind(), expr.generator_word(), expr.bottom(), expr.top());
    case DiagramExpr::Kind::Compose: {
      std::vector<SliceRow> rows = flatten_to_rows(expr.first());
      std::vector<SliceRow> upper = flatten_to_rows(expr.second());
      rows.insert(rows.end(), std::make_move_iterator(upper.begin()),
                  std::make_move_iterator(upper.end()));
      return rows;
    }
    case DiagramExpr::Kind::Tensor: {
      std::vector<SliceRow> left = flatten_to_rows(expr.first());
      std::vector<SliceRow> right = flatten_to_rows(expr.second());
      while (left.size() < right.size()) {
        left.push_back(identity_row(expr.first().top()));
      }
      while (right.size() < left.size()) {
        right.push_back(identity_row(expr.second().top()));
      }
      std::vector<SliceRow> rows;
      rows.reserve(left.size());
      for (std::size_t i = 0; i < left.size(); ++i) {
        rows.push_back(join_rows(left[i], right[i]));
      }
      return rows;
    }
  }
  throw std::logic_error("unhandled diagram node");
}

Morphism normalize(const DiagramExpr& expr, std::optional<int> source) {
  const std::vector<SliceRow> rows = flatten_to_rows(expr);
  if (contains_crossing(rows)) {
    return Morphism::zero(expr.bottom(), expr.top(), source);
  }

  PlanarMatching accumulated = PlanarMatching::identity(expr.bottom());
  BubbleCount bubbles;
  int min_label = 0;
  int max_label = 0;
  const auto absorb_labels = [&](const SignWord& word) {
    for (const int label : word.gap_labels(0)) {
      min_label = std::min(min_label, label);
      max_label = std::max(max_label, label);
    }
  };
  absorb_labels(expr.bottom());

  for (const auto& row : rows) {
    auto [composite, loops] = compose_matchings(accumulated, row_matching(row));
    for (const auto& loop : loops) {
      // The winding sense is read off the strand direction at the loop's
      // leftmost interface crossing: upward flow on the left edge means the
      // loop runs clockwise.
      const int sign =
          row.bottom.at(static_cast<std::size_t>(loop.leftmost_interface_position) - 1);
      if (sign > 0) {
        ++bubbles.clockwise;
      } else {
        ++bubbles.counterclockwise;
      }
    }
    accumulated = std::move(composite);
    absorb_labels(row.top);
  }

  if (source.has_value()) {
    if (*source + min_label < 0 || *source + max_label > 1) {
      return Morphism::zero(expr.bottom(), expr.top(), source);
    }
    // Every loop interior is one of the checked gap labels, so all loops
    // evaluate to 1 here and the bubble record is spent.
    return Morphism(expr.bottom(), expr.top(), source,
                    {{PlanarMatching::canonical(expr.bottom(), expr.top()), BubbleCount{},
                      Rational(1)}});
  }

  if (max_label - min_label > 1) {
    return Morphism::zero(expr.bottom(), expr.top(), source);
  }
  if (expr.bottom().empty() && expr.top().empty()) {
    return Morphism(expr.bottom(), expr.top(), source,
                    {{PlanarMatching(SignWord(), SignWord(), {}), bubbles, Rational(1)}});
  }
  return Morphism(expr.bottom(), expr.top(), source,
                  {{PlanarMatching::canonical(expr.bottom(), expr.top()), BubbleCount{},
                    Rational(1)}});
}

Morphism normalize(const Morphism& morphism) {
  std::vector<MorphismTerm> terms;
  terms.reserve(morphism.terms().size());
  for (const auto& term : morphism.terms()) {
    terms.push_back({PlanarMatching::canonical(term.matching.bottom(), term.matching.top()),
                     term.bubbles, term.coeff});
  }
  return Morphism(morphism.bottom(), morphism.top(), morphism.source(), std::move(terms));
}

int hom_dim(const SignWord& bottom, const SignWord& top, int source) {
  if (!bottom.valid_from(source) || !top.valid_from(source)) {
    return 0;
  }
  return matching_exists(bottom, top) ? 1 : 0;
}

DiagramExpr matching_to_expr(const PlanarMatching& matching) {
  struct PendingArc {
    int left;
    int right;
  };

  std::vector<PendingArc> bottom_arcs;
  std::vector<PendingArc> top_arcs;
  for (const auto& [a, b] : matching.arcs()) {
    if (a.side == Endpoint::Side::Bottom && b.side == Endpoint::Side::Bottom) {
      bottom_arcs.push_back({std::min(a.position, b.position), std::max(a.position, b.position)});
    } else if (a.side == Endpoint::Side::Top && b.side == Endpoint::Side::Top) {
      top_arcs.push_back({std::min(a.position, b.position), std::max(a.position, b.position)});
    }
  }

  const auto word_of_positions = [](const SignWord& word, const std::vector<int>& positions) {
    std::vector<std::int8_t> letters;
    letters.reserve(positions.size());
    for (const int p : positions) {
      letters.push_back(static_cast<std::int8_t>(word.at(static_cast<std::size_t>(p) - 1)));
    }
    return SignWord(std::move(letters));
  };

  const auto make_row = [&](const SignWord& active_word, std::size_t index,
                            DiagramExpr::Kind kind, int left_sign, int right_sign) {
    // Row acting on letters (index, index+1) of active_word for caps, or
    // inserting at position index for cups.
    std::vector<DiagramExpr> factors;
    if (index > 0) {
      factors.push_back(DiagramExpr::identity(active_word.subword(0, index)));
    }
    if (kind == DiagramExpr::Kind::Cap) {
      factors.push_back(DiagramExpr::cap(left_sign, right_sign));
      if (index + 2 < active_word.size()) {
        factors.push_back(
            DiagramExpr::identity(active_word.subword(index + 2, active_word.size() - index - 2)));
      }
    } else {
      factors.push_back(DiagramExpr::cup(left_sign, right_sign));
      if (index < active_word.size()) {
        factors.push_back(
            DiagramExpr::identity(active_word.subword(index, active_word.size() - index)));
      }
    }
    DiagramExpr row = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
      row = DiagramExpr::tensor(std::move(row), factors[i]);
    }
    return row;
  };

  std::vector<DiagramExpr> rows;

  // Close the bottom turns, innermost first.
  std::vector<int> active;
  for (int i = 1; i <= static_cast<int>(matching.bottom().size()); ++i) {
    active.push_back(i);
  }
  std::vector<PendingArc> remaining = bottom_arcs;
  while (!remaining.empty()) {
    bool progressed = false;
    for (std::size_t a = 0; a < remaining.size(); ++a) {
      const auto left_it = std::find(active.begin(), active.end(), remaining[a].left);
      if (left_it != active.end() && left_it + 1 != active.end() &&
          *(left_it + 1) == remaining[a].right) {
        const std::size_t index = static_cast<std::size_t>(left_it - active.begin());
        const SignWord current = word_of_positions(matching.bottom(), active);
        rows.push_back(make_row(current, index, DiagramExpr::Kind::Cap,
                                matching.bottom().at(static_cast<std::size_t>(remaining[a].left) - 1),
                                matching.bottom().at(static_cast<std::size_t>(remaining[a].right) - 1)));
        active.erase(left_it, left_it + 2);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(a));
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      throw std::invalid_argument("bottom turns of the matching are not nested");
    }
  }

  // Open the top turns: replay the innermost-first closing of the top word in
  // reverse, so every pair is adjacent when inserted.
  std::vector<int> top_active;
  for (int i = 1; i <= static_cast<int>(matching.top().size()); ++i) {
    top_active.push_back(i);
  }
  std::vector<PendingArc> close_order;
  std::vector<PendingArc> top_remaining = top_arcs;
  while (!top_remaining.empty()) {
    bool progressed = false;
    for (std::size_t a = 0; a < top_remaining.size(); ++a) {
      const auto left_it = std::find(top_active.begin(), top_active.end(), top_remaining[a].left);
      if (left_it != top_active.end() && left_it + 1 != top_active.end() &&
          *(left_it + 1) == top_remaining[a].right) {
        close_order.push_back(top_remaining[a]);
        top_active.erase(left_it, left_it + 2);
        top_remaining.erase(top_remaining.begin() + static_cast<std::ptrdiff_t>(a));
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      throw std::invalid_argument("top turns of the matching are not nested");
    }
  }
  // top_active now lists the top ends of through strands.
  std::vector<int> growing = top_active;
  for (auto it = close_order.rbegin(); it != close_order.rend(); ++it) {
    const auto insert_at = std::lower_bound(growing.begin(), growing.end(), it->left);
    const std::size_t index = static_cast<std::size_t>(insert_at - growing.begin());
    const SignWord current = word_of_positions(matching.top(), growing);
    rows.push_back(make_row(current, index, DiagramExpr::Kind::Cup,
                            matching.top().at(static_cast<std::size_t>(it->left) - 1),
                            matching.top().at(static_cast<std::size_t>(it->right) - 1)));
    growing.insert(insert_at, {it->left, it->right});
    std::sort(growing.begin(), growing.end());
  }

  if (rows.empty()) {
    return DiagramExpr::identity(matching.bottom());
  }
  DiagramExpr out = rows.front();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    out = DiagramExpr::compose(std::move(out), rows[i]);
  }
  return out;
}

}  // namespace fermicat
