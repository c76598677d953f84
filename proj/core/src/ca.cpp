#include "latca/ca.hpp"

#include <stdexcept>
#include <string>

#include "latca/errors.hpp"

namespace latca {

namespace {

void check_cap(int size, int cap) {
  if (size > cap)
    throw ResourceLimitError("size " + std::to_string(size) +
                             " exceeds the brute-force cap of " +
                             std::to_string(cap) + " cells");
}

// Value of x replicated enough times that every wrapped window of width
// `arity` starting in the first copy reads contiguous bits.
struct Replicated {
  std::uint64_t word;
  int total_bits;
};

Replicated replicate(std::uint64_t value, int n, int arity) {
  int copies = 1;
  while (copies * n < n + arity - 1) ++copies;
  std::uint64_t w = 0;
  for (int t = 0; t < copies; ++t) w = (w << n) | value;
  return {w, copies * n};
}

}  // namespace

BitConfig nbca_eval(const TruthTable& rule, const BitConfig& x) {
  const int d = rule.arity();
  const int n = x.length();
  if (d < 1) throw std::invalid_argument("NBCA needs a rule of arity >= 1");
  if (n < d) throw std::invalid_argument("NBCA needs at least d cells");
  const std::uint32_t mask = (1u << d) - 1;
  std::uint64_t y = 0;
  for (int c = 1; c <= n - d + 1; ++c)
    y = (y << 1) |
        static_cast<std::uint64_t>(
            rule.bit(static_cast<std::uint32_t>(x.value() >> (n - c - d + 1)) &
                     mask));
  return BitConfig(y, n - d + 1);
}

BitConfig pbca_eval(const PbcaMap& map, const BitConfig& x) {
  const int n = map.size;
  const int k = map.rule.arity();
  if (n < 1) throw std::invalid_argument("PBCA needs size >= 1");
  if (x.length() != n)
    throw std::invalid_argument("configuration length does not match size");
  if (k == 0) {
    // Constant rule: every cell takes the one table entry.
    const std::uint64_t b = map.rule.bit(0) ? (n >= 64 ? ~0ull : (1ull << n) - 1)
                                            : 0ull;
    return BitConfig(b, n);
  }
  int copies = 1;
  while (copies * n < n + k - 1) ++copies;
  if (copies * n > 64) {
    // The replicated value would not fit a word; assemble windows cell by
    // cell instead.
    std::uint64_t y = 0;
    for (int c = 1; c <= n; ++c) {
      std::uint32_t w = 0;
      for (int j = 0; j < k; ++j)
        w = (w << 1) | static_cast<std::uint32_t>(x.cell((c - 1 + j) % n + 1));
      y = (y << 1) | static_cast<std::uint64_t>(map.rule.bit(w));
    }
    return BitConfig(y, n);
  }
  const auto [rep, bits] = replicate(x.value(), n, k);
  const std::uint32_t mask = (1u << k) - 1;
  std::uint64_t y = 0;
  for (int c = 1; c <= n; ++c) {
    const std::uint32_t w =
        static_cast<std::uint32_t>(rep >> (bits - c - k + 1)) & mask;
    y = (y << 1) | static_cast<std::uint64_t>(map.rule.bit(w));
  }
  return BitConfig(y, n);
}

BitConfig diagonal_map(const BipermutiveRule& rule, const BitConfig& x) {
  if (x.length() != rule.diameter() - 1)
    throw std::invalid_argument("diagonal map needs d-1 cells");
  return nbca_eval(expand(rule), x.concat(x));
}

bool is_invertible(const PbcaMap& map, int cap) {
  const int n = map.size;
  const int k = map.rule.arity();
  if (n < 1) throw std::invalid_argument("PBCA needs size >= 1");
  // 32 cells is the hard ceiling of the occupancy scan (512 MB bitmap and a
  // word-sized replication); the configurable cap can only lower it.
  check_cap(n, std::min(cap, 32));
  if (k == 0) return false;  // constant map, never injective for n >= 1

  const std::uint64_t configs = 1ull << n;
  const std::uint32_t mask = (1u << k) - 1;
  std::vector<std::uint64_t> seen((configs + 63) / 64, 0);

  // Multiplying by this constant replicates an n-bit value.
  int copies = 1;
  while (copies * n < n + k - 1) ++copies;
  std::uint64_t repl = 0;
  for (int t = 0; t < copies; ++t) repl = (repl << n) | 1ull;
  const int total_bits = copies * n;

  for (std::uint64_t v = 0; v < configs; ++v) {
    const std::uint64_t rep = v * repl;
    std::uint64_t y = 0;
    for (int c = 1; c <= n; ++c) {
      const std::uint32_t w =
          static_cast<std::uint32_t>(rep >> (total_bits - c - k + 1)) & mask;
      y = (y << 1) | static_cast<std::uint64_t>(map.rule.bit(w));
    }
    std::uint64_t& slot = seen[y >> 6];
    const std::uint64_t bit = 1ull << (y & 63);
    if (slot & bit) return false;
    slot |= bit;
  }
  return true;
}

bool diagonal_is_permutation(const BipermutiveRule& rule, int cap) {
  const int d = rule.diameter();
  const int n = d - 1;
  check_cap(n, cap);
  const TruthTable f = expand(rule);
  const std::uint64_t configs = 1ull << n;
  const std::uint32_t mask = (1u << d) - 1;
  std::vector<std::uint64_t> seen((configs + 63) / 64, 0);
  for (std::uint64_t v = 0; v < configs; ++v) {
    const std::uint64_t z = (v << n) | v;  // x || x over 2n bits
    std::uint64_t y = 0;
    for (int c = 1; c <= n; ++c) {
      const std::uint32_t w =
          static_cast<std::uint32_t>(z >> (2 * n - c - d + 1)) & mask;
      y = (y << 1) | static_cast<std::uint64_t>(f.bit(w));
    }
    std::uint64_t& slot = seen[y >> 6];
    const std::uint64_t bit = 1ull << (y & 63);
    if (slot & bit) return false;
    slot |= bit;
  }
  return true;
}

PbcaWindowTable::PbcaWindowTable(int arity, int size)
    : arity_(arity), size_(size) {
  if (arity < 0 || arity > 8)
    throw std::invalid_argument("window table arity must be in [0, 8]");
  if (size < 1 || size > 16)
    throw std::invalid_argument("window table size must be in [1, 16]");
  const std::uint32_t configs = 1u << size;
  windows_.resize(static_cast<std::size_t>(configs) * size);
  for (std::uint32_t v = 0; v < configs; ++v) {
    for (int c = 1; c <= size; ++c) {
      std::uint32_t w = 0;
      for (int j = 0; j < arity; ++j) {
        const int cell = (c - 1 + j) % size;  // 0-based
        w = (w << 1) | ((v >> (size - 1 - cell)) & 1u);
      }
      windows_[static_cast<std::size_t>(v) * size + (c - 1)] =
          static_cast<std::uint8_t>(w);
    }
  }
}

bool pbca_code_invertible(std::uint64_t rule_code, const PbcaWindowTable& wt) {
  const int n = wt.size();
  if (n > 6)
    throw std::invalid_argument("code fast path limited to size <= 6");
  if (wt.arity() > 6)
    throw std::invalid_argument("rule codes only cover arity <= 6");
  std::uint64_t seen = 0;
  const std::uint32_t configs = wt.config_count();
  for (std::uint32_t x = 0; x < configs; ++x) {
    const std::uint8_t* w = wt.row(x);
    std::uint32_t y = 0;
    for (int i = 0; i < n; ++i)
      y = (y << 1) | static_cast<std::uint32_t>((rule_code >> w[i]) & 1u);
    const std::uint64_t bit = 1ull << y;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

}  // namespace latca
