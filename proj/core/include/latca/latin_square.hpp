#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latca/bipermutive_rule.hpp"
#include "latca/bit_config.hpp"
#include "latca/ca.hpp"
#include "latca/truth_table.hpp"

namespace latca {

/// N x N grid of symbols in [N], N = 2^(d-1). Rows, columns and symbols are
/// 1-based throughout, matching the combinatorial convention.
///
/// Grids built from a bipermutive rule are Latin by construction and carry
/// latin_verified() == true; build_square also accepts non-bipermutive rules
/// (the "only if" direction of the Latin criterion is itself worth testing)
/// and tags those grids unverified.
class LatinSquareGrid {
 public:
  LatinSquareGrid(int order, std::vector<std::uint8_t> cells,
                  bool latin_verified);

  int order() const noexcept { return order_; }
  int at(int row, int col) const;  // 1-based, symbol in [order]
  bool latin_verified() const noexcept { return latin_verified_; }

  friend bool operator==(const LatinSquareGrid& a, const LatinSquareGrid& b) {
    return a.order_ == b.order_ && a.cells_ == b.cells_;
  }

 private:
  int order_;
  std::vector<std::uint8_t> cells_;  // row-major
  bool latin_verified_;
};

/// phi: MSB-first integer value of the coordinate block, plus one.
int coord_encode(const BitConfig& x);

/// psi = phi^-1; `length` is the block width d-1.
BitConfig coord_decode(int symbol, int length);

/// S(i,j) = phi(F(psi(i) || psi(j))) for the length-2(d-1) no-boundary CA
/// with the given rule. Requires 2 <= arity <= 8 (order <= 128).
LatinSquareGrid build_square(const TruthTable& rule);

/// True iff every row and every column is a permutation of [N].
bool is_latin(const LatinSquareGrid& grid);

/// True iff the superposition of the two squares yields all N^2 ordered
/// symbol pairs. Orders must match.
bool are_orthogonal(const LatinSquareGrid& a, const LatinSquareGrid& b);

/// N coordinate pairs, 1-based, with pairwise distinct rows and pairwise
/// distinct columns.
struct CoordSet {
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const CoordSet&, const CoordSet&) = default;
};

/// {(1,1), ..., (N,N)}.
CoordSet diagonal_coords(int order);

/// True iff the coordinate set's entries carry all N distinct symbols.
/// A malformed set (wrong size, bad indices, repeated row or column) is a
/// contract violation, not a false verdict.
bool is_transversal(const LatinSquareGrid& grid, const CoordSet& coords);

/// True iff x -> F(x || x^c) is a bijection on F_2^(d-1); equivalently the
/// coordinate set {(phi(x), phi(x^c))} is a transversal of the square.
/// c must have length d-1. c = 0 reduces to the main diagonal.
bool shifted_diagonal_is_transversal(const BipermutiveRule& rule,
                                     const BitConfig& shift,
                                     int cap = kDefaultInvertibilityCap);

/// N coordinate sets partitioning [N]x[N], each a transversal of the square
/// they decompose. Witnesses the existence of an orthogonal mate.
struct TransversalDecomposition {
  std::vector<CoordSet> classes;
};

enum class DecompositionOutcome { Found, None, Unknown };

struct DecompositionResult {
  DecompositionOutcome outcome;
  std::optional<TransversalDecomposition> decomposition;  // set iff Found
  std::uint64_t nodes_visited = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Depth-first backtracking over cells in row order, assigning each cell of
/// a row to a transversal class with forward-checking on per-class column
/// and symbol occupancy. Class labels are canonicalized so that the cell
/// (1,j) belongs to class j, which every decomposition can be relabeled to.
///
/// Returns Found with a decomposition, None after exhausting the search
/// space (a definitive verdict), or Unknown when the node budget runs out —
/// never a silent failure. Orders above 16 raise ResourceLimitError.
DecompositionResult find_disjoint_decomposition(
    const LatinSquareGrid& grid,
    std::uint64_t node_budget = kDefaultNodeBudget);

/// The square assigning symbol k to every cell of class k. For a valid
/// decomposition of some square S this is Latin and orthogonal to S.
LatinSquareGrid mate_from_decomposition(const TransversalDecomposition& d);

}  // namespace latca
