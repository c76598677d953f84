#include "latca/latin_square.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "latca/errors.hpp"

namespace latca {

LatinSquareGrid::LatinSquareGrid(int order, std::vector<std::uint8_t> cells,
                                 bool latin_verified)
    : order_(order), cells_(std::move(cells)), latin_verified_(latin_verified) {
  if (order < 1 || order > 128)
    throw std::invalid_argument("order must be in [1, 128]");
  if (cells_.size() != static_cast<std::size_t>(order) * order)
    throw std::invalid_argument("cell count does not match order");
  for (std::uint8_t c : cells_)
    if (c < 1 || c > order)
      throw std::invalid_argument("cell symbol out of [1, N]");
}

int LatinSquareGrid::at(int row, int col) const {
  if (row < 1 || row > order_ || col < 1 || col > order_)
    throw std::invalid_argument("cell coordinates out of range");
  return cells_[static_cast<std::size_t>(row - 1) * order_ + (col - 1)];
}

int coord_encode(const BitConfig& x) {
  return static_cast<int>(x.value()) + 1;
}

BitConfig coord_decode(int symbol, int length) {
  if (length < 1 || length > 7)
    throw std::invalid_argument("coordinate blocks have 1 to 7 cells");
  if (symbol < 1 || symbol > (1 << length))
    throw std::invalid_argument("symbol out of range");
  return BitConfig(static_cast<std::uint64_t>(symbol - 1), length);
}

LatinSquareGrid build_square(const TruthTable& rule) {
  const int d = rule.arity();
  if (d < 2 || d > 8)
    throw std::invalid_argument("square construction needs arity in [2, 8]");
  const int n = d - 1;
  const int N = 1 << n;
  const int L = 2 * n;
  const std::uint32_t mask = (1u << d) - 1;
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(N) * N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const std::uint32_t z = (static_cast<std::uint32_t>(i) << n) |
                              static_cast<std::uint32_t>(j);
      std::uint32_t y = 0;
      for (int c = 1; c <= n; ++c)
        y = (y << 1) |
            static_cast<std::uint32_t>(rule.bit((z >> (L - c - d + 1)) & mask));
      cells[static_cast<std::size_t>(i) * N + j] =
          static_cast<std::uint8_t>(y + 1);
    }
  }
  const bool bip = is_bipermutive(rule);
  LatinSquareGrid grid(N, std::move(cells), bip);
  if (bip && !is_latin(grid))
    throw std::logic_error("bipermutive rule produced a non-Latin grid");
  return grid;
}

namespace {

using Occupancy = std::array<std::uint64_t, 2>;  // 128 symbols

bool mark(Occupancy& occ, int symbol_zero_based) {
  std::uint64_t& w = occ[symbol_zero_based >> 6];
  const std::uint64_t bit = 1ull << (symbol_zero_based & 63);
  if (w & bit) return false;
  w |= bit;
  return true;
}

}  // namespace

bool is_latin(const LatinSquareGrid& grid) {
  const int N = grid.order();
  for (int i = 1; i <= N; ++i) {
    Occupancy row{}, col{};
    for (int j = 1; j <= N; ++j) {
      if (!mark(row, grid.at(i, j) - 1)) return false;
      if (!mark(col, grid.at(j, i) - 1)) return false;
    }
  }
  return true;
}

bool are_orthogonal(const LatinSquareGrid& a, const LatinSquareGrid& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("orthogonality needs equal orders");
  const int N = a.order();
  std::vector<std::uint64_t> seen((static_cast<std::size_t>(N) * N + 63) / 64,
                                  0);
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) {
      const std::size_t pair =
          static_cast<std::size_t>(a.at(i, j) - 1) * N + (b.at(i, j) - 1);
      std::uint64_t& w = seen[pair >> 6];
      const std::uint64_t bit = 1ull << (pair & 63);
      if (w & bit) return false;
      w |= bit;
    }
  }
  return true;
}

CoordSet diagonal_coords(int order) {
  CoordSet cs;
  cs.pairs.reserve(static_cast<std::size_t>(order));
  for (int i = 1; i <= order; ++i) cs.pairs.emplace_back(i, i);
  return cs;
}

bool is_transversal(const LatinSquareGrid& grid, const CoordSet& coords) {
  const int N = grid.order();
  if (coords.pairs.size() != static_cast<std::size_t>(N))
    throw std::invalid_argument("coordinate set must have N pairs");
  Occupancy rows{}, cols{};
  for (const auto& [i, j] : coords.pairs) {
    if (i < 1 || i > N || j < 1 || j > N)
      throw std::invalid_argument("coordinate out of range");
    if (!mark(rows, i - 1))
      throw std::invalid_argument("coordinate set repeats a row");
    if (!mark(cols, j - 1))
      throw std::invalid_argument("coordinate set repeats a column");
  }
  Occupancy symbols{};
  for (const auto& [i, j] : coords.pairs)
    if (!mark(symbols, grid.at(i, j) - 1)) return false;
  return true;
}

bool shifted_diagonal_is_transversal(const BipermutiveRule& rule,
                                     const BitConfig& shift, int cap) {
  const int d = rule.diameter();
  const int n = d - 1;
  if (shift.length() != n)
    throw std::invalid_argument("shift must have d-1 cells");
  if (n > cap)
    throw ResourceLimitError("size " + std::to_string(n) +
                             " exceeds the brute-force cap of " +
                             std::to_string(cap) + " cells");
  const TruthTable f = expand(rule);
  const std::uint64_t configs = 1ull << n;
  const std::uint64_t c = shift.value();
  const std::uint32_t mask = (1u << d) - 1;
  std::vector<std::uint64_t> seen((configs + 63) / 64, 0);
  for (std::uint64_t v = 0; v < configs; ++v) {
    const std::uint64_t z = (v << n) | (v ^ c);  // x || (x ^ c)
    std::uint64_t y = 0;
    for (int t = 1; t <= n; ++t) {
      const std::uint32_t w =
          static_cast<std::uint32_t>(z >> (2 * n - t - d + 1)) & mask;
      y = (y << 1) | static_cast<std::uint64_t>(f.bit(w));
    }
    std::uint64_t& slot = seen[y >> 6];
    const std::uint64_t bit = 1ull << (y & 63);
    if (slot & bit) return false;
    slot |= bit;
  }
  return true;
}

namespace {

struct DecompositionSearch {
  const LatinSquareGrid& grid;
  int N;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> cls;                    // class of each cell, row-major
  std::array<std::uint32_t, 16> col_used{};  // columns taken by each class
  std::array<std::uint32_t, 16> sym_used{};  // symbols taken by each class
  std::vector<std::uint32_t> row_used;     // classes assigned in each row

  enum class Step { Found, Exhausted, OverBudget };

  DecompositionSearch(const LatinSquareGrid& g, std::uint64_t b)
      : grid(g), N(g.order()), budget(b),
        cls(static_cast<std::size_t>(N) * N, -1),
        row_used(static_cast<std::size_t>(N), 0) {}

  int symbol(int r, int c) const { return grid.at(r + 1, c + 1) - 1; }

  Step search(int r, int c) {
    if (c == N) return search(r + 1, 0);
    if (r == N) return Step::Found;
    const int s = symbol(r, c);
    for (int t = 0; t < N; ++t) {
      if (row_used[r] & (1u << t)) continue;
      if (col_used[t] & (1u << c)) continue;
      if (sym_used[t] & (1u << s)) continue;
      if (++nodes > budget) return Step::OverBudget;
      row_used[r] |= 1u << t;
      col_used[t] |= 1u << c;
      sym_used[t] |= 1u << s;
      cls[static_cast<std::size_t>(r) * N + c] = t;
      const Step sub = search(r, c + 1);
      if (sub != Step::Exhausted) return sub;
      cls[static_cast<std::size_t>(r) * N + c] = -1;
      row_used[r] &= ~(1u << t);
      col_used[t] &= ~(1u << c);
      sym_used[t] &= ~(1u << s);
    }
    return Step::Exhausted;
  }
};

}  // namespace

DecompositionResult find_disjoint_decomposition(const LatinSquareGrid& grid,
                                                std::uint64_t node_budget) {
  const int N = grid.order();
  if (N > 16)
    throw ResourceLimitError(
        "decomposition search is capped at order 16, got order " +
        std::to_string(N));

  DecompositionSearch s(grid, node_budget);
  // Canonical labeling: cell (1,j) belongs to class j. Any decomposition can
  // be relabeled this way, so fixing row 1 loses no solutions.
  for (int j = 0; j < N; ++j) {
    s.cls[static_cast<std::size_t>(j)] = j;
    s.row_used[0] |= 1u << j;
    s.col_used[j] |= 1u << j;
    s.sym_used[j] |= 1u << s.symbol(0, j);
  }

  const auto step = s.search(1, 0);
  DecompositionResult result;
  result.nodes_visited = s.nodes;
  switch (step) {
    case DecompositionSearch::Step::OverBudget:
      result.outcome = DecompositionOutcome::Unknown;
      return result;
    case DecompositionSearch::Step::Exhausted:
      result.outcome = DecompositionOutcome::None;
      return result;
    case DecompositionSearch::Step::Found:
      break;
  }

  TransversalDecomposition decomp;
  decomp.classes.resize(static_cast<std::size_t>(N));
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      const int t = s.cls[static_cast<std::size_t>(r) * N + c];
      decomp.classes[static_cast<std::size_t>(t)].pairs.emplace_back(r + 1,
                                                                     c + 1);
    }
  result.outcome = DecompositionOutcome::Found;
  result.decomposition = std::move(decomp);
  return result;
}

LatinSquareGrid mate_from_decomposition(const TransversalDecomposition& d) {
  const int N = static_cast<int>(d.classes.size());
  if (N < 1 || N > 128)
    throw std::invalid_argument("decomposition must have 1 to 128 classes");
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(N) * N, 0);
  for (int t = 0; t < N; ++t) {
    const CoordSet& cs = d.classes[static_cast<std::size_t>(t)];
    if (cs.pairs.size() != static_cast<std::size_t>(N))
      throw std::invalid_argument("each class must have N cells");
    Occupancy rows{}, cols{};
    for (const auto& [i, j] : cs.pairs) {
      if (i < 1 || i > N || j < 1 || j > N)
        throw std::invalid_argument("coordinate out of range");
      if (!mark(rows, i - 1) || !mark(cols, j - 1))
        throw std::invalid_argument("class repeats a row or column");
      std::uint8_t& cell = cells[static_cast<std::size_t>(i - 1) * N + (j - 1)];
      if (cell != 0)
        throw std::invalid_argument("classes overlap: not a partition");
      cell = static_cast<std::uint8_t>(t + 1);
    }
  }
  // N classes x N cells with no overlap cover all N^2 cells.
  return LatinSquareGrid(N, std::move(cells), true);
}

}  // namespace latca
