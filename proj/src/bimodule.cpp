#include "fermicat/bimodule.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fermicat {

namespace {

int ipow(int base, std::size_t exponent) {
  int result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

// Coordinate dimension of the vector layout used for a word while a diagram
// is being applied. Nonempty words use the plain tensor layout; the empty
// word based at 1 uses the n^2 coordinates of the matrix ring.
int layout_dim(const SignWord& word, int source, int n) {
  if (word.empty()) return source == 1 ? n * n : 1;
  return ipow(n, word.size());
}

// One elementary tile application: a single turn at a known slot, every
// other strand carried along unchanged.
struct PrimStep {
  DiagramExpr::Kind kind;  // Cap or Cup
  int left_sign = 0;
  int right_sign = 0;
  int pos = 0;  // 0-based slot of the pair (cap: in `before`; cup: in `after`)
  SignWord before{std::vector<std::int8_t>{}};
  SignWord after{std::vector<std::int8_t>{}};
};

SignWord erase_pair(const SignWord& word, int pos) {
  const std::size_t p = static_cast<std::size_t>(pos);
  return word.subword(0, p).concat(word.subword(p + 2, word.size() - p - 2));
}

SignWord insert_pair(const SignWord& word, int pos, int left, int right) {
  const std::size_t p = static_cast<std::size_t>(pos);
  SignWord pair(std::vector<std::int8_t>{static_cast<std::int8_t>(left),
                                         static_cast<std::int8_t>(right)});
  return word.subword(0, p).concat(pair).concat(
      word.subword(p, word.size() - p));
}

// Left-to-right decomposition of the rows of a flattened diagram into
// elementary turn steps. Tiles of one row have disjoint footprints, so the
// sweep order within a row does not matter.
std::vector<PrimStep> build_chain(const std::vector<SliceRow>& rows,
                                  const SignWord& bottom) {
  std::vector<PrimStep> chain;
  SignWord current = bottom;
  for (const SliceRow& row : rows) {
    if (current != row.bottom)
      throw std::logic_error("row decomposition lost track of the boundary");
    int pos = 0;
    for (const Tile& tile : row.tiles) {
      switch (tile.kind) {
        case DiagramExpr::Kind::Identity:
          pos += static_cast<int>(tile.word.size());
          break;
        case DiagramExpr::Kind::Cap: {
          PrimStep step;
          step.kind = DiagramExpr::Kind::Cap;
          step.left_sign = tile.word.at(0);
          step.right_sign = tile.word.at(1);
          step.pos = pos;
          step.before = current;
          step.after = erase_pair(current, pos);
          current = step.after;
          chain.push_back(std::move(step));
          break;
        }
        case DiagramExpr::Kind::Cup: {
          PrimStep step;
          step.kind = DiagramExpr::Kind::Cup;
          step.left_sign = tile.word.at(0);
          step.right_sign = tile.word.at(1);
          step.pos = pos;
          step.before = current;
          step.after = insert_pair(current, pos, step.left_sign,
                                   step.right_sign);
          current = step.after;
          chain.push_back(std::move(step));
          pos += 2;
          break;
        }
        default:
          throw std::logic_error("unexpected tile in turn decomposition");
      }
    }
    if (current != row.top)
      throw std::logic_error("row decomposition lost track of the boundary");
  }
  return chain;
}

}  // namespace

RepContext::RepContext(int n) : n_(n) {
  if (n < 2)
    throw std::invalid_argument(
        "matrix model needs n >= 2 so the two labels stay distinct");
}

RatMatrix pair_junction_relations(int n) {
  // Coordinates of a "-+" pair: (j, y) -> j*n + y. For every matrix unit
  // E_ab the row states  (row_j . E_ab) (x) col_y  =  row_j (x) (E_ab col_y),
  // i.e.  d_{ja} (b,y)-coordinate  equals  d_{by} (j,a)-coordinate.
  std::vector<RatVector> rows;
  const int dim = n * n;
  for (int j = 0; j < n; ++j)
    for (int y = 0; y < n; ++y)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          RatVector rel = RatVector::Zero(dim);
          if (j == a) rel(b * n + y) += Rational(1);
          if (b == y) rel(j * n + a) -= Rational(1);
          bool nonzero = false;
          for (int c = 0; c < dim; ++c)
            if (!rel(c).is_zero()) {
              nonzero = true;
              break;
            }
          if (nonzero) rows.push_back(std::move(rel));
        }
  RatMatrix out(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    out.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  return out;
}

const RepContext::Space& RepContext::word_space(const SignWord& word,
                                                int source) const {
  if (source != 0 && source != 1)
    throw std::domain_error("base label must be 0 or 1");
  const auto key = std::make_pair(word.str(), source);
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, build_word_space(word, source)).first;
  return it->second;
}

RepContext::Space RepContext::build_word_space(const SignWord& word,
                                               int source) const {
  const int n = n_;
  Space sp;
  sp.ambient = layout_dim(word, source, n);
  if (!word.valid_from(source)) {
    sp.dim = 0;
    sp.proj = RatMatrix::Zero(0, sp.ambient);
    sp.sect = RatMatrix::Zero(sp.ambient, 0);
    return sp;
  }
  if (word.empty()) {
    sp.dim = sp.ambient;
    sp.proj = RatMatrix::Identity(sp.dim, sp.dim);
    sp.sect = RatMatrix::Identity(sp.dim, sp.dim);
    return sp;
  }

  // Fold the word in from the left, one strand at a time. Junctions read
  // "+-" carry scalars and impose nothing; junctions read "-+" carry the
  // matrix ring and identify x.E (x) y with x (x) E.y.
  int dim = n;
  int ambient = n;
  RatMatrix proj = RatMatrix::Identity(n, n);
  RatMatrix sect = RatMatrix::Identity(n, n);
  const RatMatrix eye = RatMatrix::Identity(n, n);
  for (std::size_t k = 1; k < word.size(); ++k) {
    const bool ring_junction = word.at(k - 1) < 0 && word.at(k) > 0;
    if (!ring_junction) {
      proj = kron(proj, eye);
      sect = kron(sect, eye);
      dim *= n;
      ambient *= n;
      continue;
    }
    const int cand = dim * n;
    std::vector<RatVector> rows;
    for (int u = 0; u < dim; ++u)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          // Right action of E_ab on the last (downward) strand of the
          // section representative of basis class u.
          RatVector shifted = RatVector::Zero(ambient);
          for (int r = 0; r < ambient / n; ++r)
            shifted(r * n + b) = sect(r * n + a, u);
          const RatVector pv = proj * shifted;  // class of u . E_ab
          for (int y = 0; y < n; ++y) {
            RatVector rel = RatVector::Zero(cand);
            for (int q = 0; q < dim; ++q) rel(q * n + y) = pv(q);
            if (b == y) rel(u * n + a) -= Rational(1);
            bool nonzero = false;
            for (int c = 0; c < cand; ++c)
              if (!rel(c).is_zero()) {
                nonzero = true;
                break;
              }
            if (nonzero) rows.push_back(std::move(rel));
          }
        }
    RatMatrix relmat(static_cast<Eigen::Index>(rows.size()), cand);
    for (std::size_t r = 0; r < rows.size(); ++r)
      relmat.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
    const RowEchelonResult ech = row_reduce(relmat);

    std::vector<int> free_cols;
    {
      std::size_t pi = 0;
      for (int c = 0; c < cand; ++c) {
        if (pi < ech.pivots.size() && ech.pivots[pi] == c)
          ++pi;
        else
          free_cols.push_back(c);
      }
    }
    const int qdim = static_cast<int>(free_cols.size());
    RatMatrix pstep = RatMatrix::Zero(qdim, cand);
    for (int i = 0; i < qdim; ++i) pstep(i, free_cols[i]) = Rational(1);
    for (int i = 0; i < ech.rank; ++i) {
      const int p = ech.pivots[static_cast<std::size_t>(i)];
      for (int j = 0; j < qdim; ++j)
        pstep(j, p) = -ech.reduced(i, free_cols[static_cast<std::size_t>(j)]);
    }
    RatMatrix sstep = RatMatrix::Zero(cand, qdim);
    for (int i = 0; i < qdim; ++i) sstep(free_cols[i], i) = Rational(1);

    proj = pstep * kron(proj, eye);
    sect = kron(sect, eye) * sstep;
    dim = qdim;
    ambient *= n;
  }

  sp.dim = dim;
  sp.proj = std::move(proj);
  sp.sect = std::move(sect);
  return sp;
}

namespace {

// Apply one elementary turn to every column of a coordinate block.
RatMatrix apply_step(const PrimStep& step, const RatMatrix& block, int source,
                     int n, RepContext::AbsorbSide side) {
  const int cols = static_cast<int>(block.cols());
  const int out_dim = layout_dim(step.after, source, n);
  const int l = static_cast<int>(step.before.size());

  if (step.kind == DiagramExpr::Kind::Cap) {
    if (step.left_sign < 0 && step.right_sign > 0) {
      // Pairing of a row strand with the column strand to its right: plain
      // contraction of the two equal indices.
      const int p = step.pos;
      const int low_len = l - p - 2;
      const int high_cnt = ipow(n, static_cast<std::size_t>(p));
      const int low_cnt = ipow(n, static_cast<std::size_t>(low_len));
      RatMatrix out = RatMatrix::Zero(out_dim, cols);
      for (int h = 0; h < high_cnt; ++h)
        for (int j = 0; j < n; ++j)
          for (int low = 0; low < low_cnt; ++low) {
            const int in_idx = ((h * n + j) * n + j) * low_cnt + low;
            const int out_idx = h * low_cnt + low;
            out.row(out_idx) += block.row(in_idx);
          }
      return out;
    }
    // Column strand paired with the row strand to its right produces a
    // matrix unit that a neighboring strand must swallow.
    if (l == 2) {
      // Nothing flanks the pair: the result lands in the matrix-ring
      // coordinates of the empty word based at 1, which match the pair's
      // tensor coordinates entry for entry.
      return block;
    }
    const bool has_left = step.pos > 0;
    const bool has_right = step.pos + 2 < l;
    const bool use_left = (side == RepContext::AbsorbSide::PreferLeft)
                              ? has_left
                              : !has_right;
    RatMatrix out = RatMatrix::Zero(out_dim, cols);
    if (use_left) {
      // Slots (pos-1, pos, pos+1) = (row k, col i, row j): k pairs with i,
      // j stays behind in the neighbor's slot.
      const int p0 = step.pos - 1;
      const int low_len = l - step.pos - 2;
      const int high_cnt = ipow(n, static_cast<std::size_t>(p0));
      const int low_cnt = ipow(n, static_cast<std::size_t>(low_len));
      for (int h = 0; h < high_cnt; ++h)
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < n; ++i)
            for (int low = 0; low < low_cnt; ++low) {
              const int in_idx =
                  (((h * n + i) * n + i) * n + j) * low_cnt + low;
              const int out_idx = (h * n + j) * low_cnt + low;
              out.row(out_idx) += block.row(in_idx);
            }
    } else {
      // Slots (pos, pos+1, pos+2) = (col i, row j, col m): j pairs with m,
      // i stays behind.
      const int p0 = step.pos;
      const int low_len = l - step.pos - 3;
      const int high_cnt = ipow(n, static_cast<std::size_t>(p0));
      const int low_cnt = ipow(n, static_cast<std::size_t>(low_len));
      for (int h = 0; h < high_cnt; ++h)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int low = 0; low < low_cnt; ++low) {
              const int in_idx =
                  (((h * n + i) * n + j) * n + j) * low_cnt + low;
              const int out_idx = (h * n + i) * low_cnt + low;
              out.row(out_idx) += block.row(in_idx);
            }
    }
    return out;
  }

  // Cup.
  if (l == 0 && source == 1) {
    // Opening a "+-" pair out of the matrix ring: unit coordinates map to
    // the pair's tensor coordinates entry for entry.
    return block;
  }
  const int p = step.pos;
  const int low_len = l - p;
  const int high_cnt = ipow(n, static_cast<std::size_t>(p));
  const int low_cnt = ipow(n, static_cast<std::size_t>(low_len));
  // A "-+" opening carries 1/n so that a closed free loop counts exactly 1.
  const Rational scale =
      step.left_sign < 0 ? Rational(1, n) : Rational(1);
  RatMatrix out = RatMatrix::Zero(out_dim, cols);
  for (int h = 0; h < high_cnt; ++h)
    for (int k = 0; k < n; ++k)
      for (int low = 0; low < low_cnt; ++low) {
        const int in_idx = h * low_cnt + low;
        const int out_idx = ((h * n + k) * n + k) * low_cnt + low;
        out.row(out_idx) = block.row(in_idx) * scale;
      }
  return out;
}

}  // namespace

RatMatrix RepContext::eval(const DiagramExpr& expr, int source,
                           AbsorbSide side) const {
  if (source != 0 && source != 1)
    throw std::domain_error("base label must be 0 or 1");
  const Space& bot = word_space(expr.bottom(), source);
  const Space& top = word_space(expr.top(), source);

  const std::vector<SliceRow> rows = flatten_to_rows(expr);
  for (const SliceRow& row : rows)
    for (const Tile& tile : row.tiles)
      if (tile.kind == DiagramExpr::Kind::Crossing)
        return RatMatrix::Zero(top.dim, bot.dim);

  const std::vector<PrimStep> chain = build_chain(rows, expr.bottom());
  if (!expr.bottom().valid_from(source))
    return RatMatrix::Zero(top.dim, bot.dim);
  for (const PrimStep& step : chain)
    if (!step.after.valid_from(source))
      return RatMatrix::Zero(top.dim, bot.dim);

  RatMatrix block = bot.sect;
  for (const PrimStep& step : chain)
    block = apply_step(step, block, source, n_, side);
  return top.proj * block;
}

RatMatrix RepContext::eval(const Morphism& morphism) const {
  if (!morphism.source())
    throw std::invalid_argument("evaluation needs a based morphism");
  const int source = *morphism.source();
  const Space& bot = word_space(morphism.bottom(), source);
  const Space& top = word_space(morphism.top(), source);
  RatMatrix acc = RatMatrix::Zero(top.dim, bot.dim);
  for (const MorphismTerm& term : morphism.terms()) {
    // A free loop pinned to a base region is 1 when its inside label is
    // admissible from that base and 0 otherwise.
    if (term.bubbles.clockwise > 0 && source == 0) continue;
    if (term.bubbles.counterclockwise > 0 && source == 1) continue;
    const DiagramExpr e = matching_to_expr(term.matching);
    acc += eval(e, source) * term.coeff;
  }
  return acc;
}

RatMatrix RepContext::close_pair_ambient(int left_sign, int right_sign) const {
  const int n = n_;
  if (left_sign < 0 && right_sign > 0) {
    RatMatrix out = RatMatrix::Zero(1, n * n);
    for (int j = 0; j < n; ++j) out(0, j * n + j) = Rational(1);
    return out;
  }
  if (left_sign > 0 && right_sign < 0)
    return RatMatrix::Identity(n * n, n * n);
  throw std::invalid_argument("turning pair needs two opposite signs");
}

RatMatrix RepContext::open_pair_ambient(int left_sign, int right_sign) const {
  const int n = n_;
  if (left_sign < 0 && right_sign > 0) {
    RatMatrix out = RatMatrix::Zero(n * n, 1);
    for (int k = 0; k < n; ++k) out(k * n + k, 0) = Rational(1, n);
    return out;
  }
  if (left_sign > 0 && right_sign < 0)
    return RatMatrix::Identity(n * n, n * n);
  throw std::invalid_argument("turning pair needs two opposite signs");
}

}  // namespace fermicat
