#pragma once

#include <cstdint>
#include <vector>

#include "latca/bipermutive_rule.hpp"
#include "latca/bit_config.hpp"
#include "latca/truth_table.hpp"

namespace latca {

/// Default cap on exhaustive bijectivity scans: 2^24 configurations needs a
/// 2 MB occupancy bitmap and a couple of seconds.
inline constexpr int kDefaultInvertibilityCap = 24;

/// A periodic-boundary CA: the local rule applied to every length-n window
/// of a cyclic configuration of n cells. The window of cell i starts at i;
/// when the rule arity exceeds n the window wraps around more than once
/// (indices are reduced mod n).
struct PbcaMap {
  TruthTable rule;
  int size = 0;
};

/// No-boundary CA step: output cell i is the rule applied to
/// (x_i,...,x_{i+d-1}), i = 1..n-d+1. Requires x.length() >= arity.
BitConfig nbca_eval(const TruthTable& rule, const BitConfig& x);

/// Periodic-boundary CA step; x.length() must equal map.size.
BitConfig pbca_eval(const PbcaMap& map, const BitConfig& x);

/// The diagonal map T(x) = F(x||x) of the no-boundary CA F with the
/// expanded rule. Its image is the main diagonal of the generated square.
/// x must have length diameter-1.
BitConfig diagonal_map(const BipermutiveRule& rule, const BitConfig& x);

/// Decides whether the PBCA is a bijection on its 2^n configurations by
/// marking images in an occupancy bitmap. Sizes above the cap raise
/// ResourceLimitError rather than guessing.
bool is_invertible(const PbcaMap& map, int cap = kDefaultInvertibilityCap);

/// Decides whether T(x) = F(x||x) is a permutation of F_2^(d-1), scanning
/// the expanded rule directly. Always agrees with is_invertible of the
/// generator's size-(d-1) PBCA; the two verdicts are computed on separate
/// paths so the equivalence stays testable.
bool diagonal_is_permutation(const BipermutiveRule& rule,
                             int cap = kDefaultInvertibilityCap);

/// Per-configuration window indices of a PBCA, precomputed so that a rule's
/// step on a configuration reduces to table lookups. Windows depend only on
/// the configuration, never on the rule, so one table serves an entire
/// enumeration sweep over rules.
class PbcaWindowTable {
 public:
  PbcaWindowTable(int arity, int size);  // size <= 16, arity <= 8

  int arity() const noexcept { return arity_; }
  int size() const noexcept { return size_; }
  std::uint32_t config_count() const noexcept { return 1u << size_; }

  const std::uint8_t* row(std::uint32_t config) const noexcept {
    return windows_.data() + static_cast<std::size_t>(config) * size_;
  }

 private:
  std::vector<std::uint8_t> windows_;
  int arity_;
  int size_;
};

/// Invertibility of the PBCA whose rule is given as a raw truth-table code
/// (bit v of `rule_code` = rule output on window value v). Fast path for
/// enumeration sweeps; the table size must be at most 6 cells so the
/// occupancy set fits one word.
bool pbca_code_invertible(std::uint64_t rule_code, const PbcaWindowTable& wt);

}  // namespace latca
