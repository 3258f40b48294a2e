#include "fermicat/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermicat {

namespace {

// Boundary-cycle coordinate: bottom points left to right, then top points
// right to left, tracing the boundary of the strip once.
int cycle_index(const Endpoint& e, int bottom_size, int top_size) {
  if (e.side == Endpoint::Side::Bottom) {
    return e.position - 1;
  }
  return bottom_size + (top_size - e.position);
}

// Removes the rightmost adjacent opposite pair until none remains. Returns
// the removed pairs (original 1-based positions, removal order) and the
// surviving positions in left-to-right order.
struct Fold {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> survivors;
};

Fold fold_word(const SignWord& word) {
  struct Letter {
    int position;
    int sign;
  };
  std::vector<Letter> active;
  active.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    active.push_back({static_cast<int>(i) + 1, word.at(i)});
  }

  Fold out;
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = active.size(); i > 1; --i) {
      if (active[i - 2].sign != active[i - 1].sign) {
        out.pairs.emplace_back(active[i - 2].position, active[i - 1].position);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(i) - 2,
                     active.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }
  for (const auto& letter : active) {
    out.survivors.push_back(letter.position);
  }
  return out;
}

}  // namespace

PlanarMatching::PlanarMatching(SignWord bottom, SignWord top,
                               std::vector<std::pair<Endpoint, Endpoint>> arcs)
    : bottom_(std::move(bottom)), top_(std::move(top)), arcs_(std::move(arcs)) {
  const int p = static_cast<int>(bottom_.size());
  const int q = static_cast<int>(top_.size());
  for (auto& arc : arcs_) {
    if (cycle_index(arc.first, p, q) > cycle_index(arc.second, p, q)) {
      std::swap(arc.first, arc.second);
    }
  }
  std::sort(arcs_.begin(), arcs_.end(),
            [p, q](const auto& lhs, const auto& rhs) {
              return cycle_index(lhs.first, p, q) < cycle_index(rhs.first, p, q);
            });
}

PlanarMatching PlanarMatching::identity(const SignWord& word) {
  std::vector<std::pair<Endpoint, Endpoint>> arcs;
  arcs.reserve(word.size());
  for (int i = 1; i <= static_cast<int>(word.size()); ++i) {
    arcs.push_back({Endpoint{Endpoint::Side::Bottom, i}, Endpoint{Endpoint::Side::Top, i}});
  }
  return PlanarMatching(word, word, std::move(arcs));
}

PlanarMatching PlanarMatching::canonical(const SignWord& bottom, const SignWord& top) {
  if (bottom == top) {
    return identity(bottom);
  }
  const Fold bottom_fold = fold_word(bottom);
  const Fold top_fold = fold_word(top);
  if (bottom_fold.survivors.size() != top_fold.survivors.size()) {
    throw std::invalid_argument("no orientation-consistent pairing between '" + bottom.str() +
                                "' and '" + top.str() + "'");
  }
  std::vector<std::pair<Endpoint, Endpoint>> arcs;
  for (const auto& [left, right] : bottom_fold.pairs) {
    arcs.push_back({Endpoint{Endpoint::Side::Bottom, left}, Endpoint{Endpoint::Side::Bottom, right}});
  }
  for (const auto& [left, right] : top_fold.pairs) {
    arcs.push_back({Endpoint{Endpoint::Side::Top, left}, Endpoint{Endpoint::Side::Top, right}});
  }
  for (std::size_t i = 0; i < bottom_fold.survivors.size(); ++i) {
    const int b = bottom_fold.survivors[i];
    const int t = top_fold.survivors[i];
    if (bottom.at(static_cast<std::size_t>(b) - 1) != top.at(static_cast<std::size_t>(t) - 1)) {
      throw std::invalid_argument("no orientation-consistent pairing between '" + bottom.str() +
                                  "' and '" + top.str() + "'");
    }
    arcs.push_back({Endpoint{Endpoint::Side::Bottom, b}, Endpoint{Endpoint::Side::Top, t}});
  }
  return PlanarMatching(bottom, top, std::move(arcs));
}

bool PlanarMatching::sign_valid() const {
  for (const auto& [a, b] : arcs_) {
    const int sign_a = (a.side == Endpoint::Side::Bottom)
                           ? bottom_.at(static_cast<std::size_t>(a.position) - 1)
                           : top_.at(static_cast<std::size_t>(a.position) - 1);
    const int sign_b = (b.side == Endpoint::Side::Bottom)
                           ? bottom_.at(static_cast<std::size_t>(b.position) - 1)
                           : top_.at(static_cast<std::size_t>(b.position) - 1);
    if (a.side == b.side) {
      if (sign_a == sign_b) {
        return false;  // a turning strand must reverse orientation
      }
    } else {
      if (sign_a != sign_b) {
        return false;  // a through strand keeps its orientation
      }
    }
  }
  return true;
}

bool PlanarMatching::planar() const {
  const int p = static_cast<int>(bottom_.size());
  const int q = static_cast<int>(top_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs_.size(); ++j) {
      const int a1 = cycle_index(arcs_[i].first, p, q);
      const int a2 = cycle_index(arcs_[i].second, p, q);
      const int b1 = cycle_index(arcs_[j].first, p, q);
      const int b2 = cycle_index(arcs_[j].second, p, q);
      const bool b1_inside = a1 < b1 && b1 < a2;
      const bool b2_inside = a1 < b2 && b2 < a2;
      if (b1_inside != b2_inside) {
        return false;
      }
    }
  }
  return true;
}

bool matching_exists(const SignWord& bottom, const SignWord& top) {
  // Walk the boundary cycle: bottom letters keep their sign, top letters are
  // flipped (an upward strand leaves through the top). A pairing exists iff
  // the cycle word can be emptied by removing circularly adjacent opposite
  // pairs.
  std::vector<int> cycle;
  cycle.reserve(bottom.size() + top.size());
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    cycle.push_back(bottom.at(i));
  }
  for (std::size_t j = top.size(); j > 0; --j) {
    cycle.push_back(-top.at(j - 1));
  }
  while (!cycle.empty()) {
    bool removed = false;
    const std::size_t count = cycle.size();
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t next = (i + 1) % count;
      if (next != i && cycle[i] != cycle[next]) {
        if (next > i) {
          cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(next));
          cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
          cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(next));
        }
        removed = true;
        break;
      }
    }
    if (!removed) {
      return false;
    }
  }
  return true;
}

}  // namespace fermicat
