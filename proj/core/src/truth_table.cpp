#include "latca/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace latca {

namespace {

constexpr int kMaxArity = 8;

int checked_arity(int arity) {
  if (arity < 0 || arity > kMaxArity)
    throw std::invalid_argument("truth-table arity must be in [0, 8]");
  return arity;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

TruthTable::TruthTable(int arity) : arity_(checked_arity(arity)) {}

TruthTable TruthTable::from_code(int arity, std::uint64_t code) {
  checked_arity(arity);
  if (arity > 6)
    throw std::invalid_argument("integer codes only cover arity <= 6");
  if (arity < 6 && code >= (1ull << (1u << arity)))
    throw std::invalid_argument("code out of range for this arity");
  TruthTable t(arity);
  t.words_[0] = code;
  return t;
}

TruthTable TruthTable::from_hex(int arity, std::string_view hex) {
  checked_arity(arity);
  if (hex.empty()) throw std::invalid_argument("empty hex truth table");
  TruthTable t(arity);
  std::uint32_t pos = 0;  // bit position of the current digit's low bit
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, pos += 4) {
    const int d = hex_digit(*it);
    if (d < 0) throw std::invalid_argument("invalid hex digit in truth table");
    if (d == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (!((d >> b) & 1)) continue;
      const std::uint32_t index = pos + static_cast<std::uint32_t>(b);
      if (index >= t.size())
        throw std::invalid_argument("hex value out of range for this arity");
      t.set_bit(index, true);
    }
  }
  return t;
}

TruthTable TruthTable::from_wolfram(const WolframCode& wc) {
  return from_code(wc.arity, wc.value);
}

void TruthTable::set_bit(std::uint32_t index, bool v) {
  if (index >= size()) throw std::invalid_argument("bit index out of range");
  const std::uint64_t bit = 1ull << (index & 63);
  if (v)
    words_[index >> 6] |= bit;
  else
    words_[index >> 6] &= ~bit;
}

std::uint64_t TruthTable::code() const {
  if (arity_ > 6)
    throw std::invalid_argument("integer codes only cover arity <= 6");
  return words_[0];
}

std::string TruthTable::hex() const {
  static const char* digits = "0123456789abcdef";
  const std::uint32_t ndigits = size() >= 4 ? size() / 4 : 1;
  std::string s(ndigits, '0');
  for (std::uint32_t i = 0; i < ndigits; ++i) {
    std::uint32_t nib = 0;
    for (int b = 0; b < 4; ++b) {
      const std::uint32_t index = i * 4 + static_cast<std::uint32_t>(b);
      if (index < size() && bit(index)) nib |= 1u << b;
    }
    s[ndigits - 1 - i] = digits[nib];
  }
  return s;
}

TruthTable TruthTable::complemented() const {
  TruthTable t(arity_);
  for (std::uint32_t v = 0; v < size(); ++v) t.set_bit(v, !bit(v));
  return t;
}

TruthTable TruthTable::reversed() const {
  TruthTable t(arity_);
  for (std::uint32_t v = 0; v < size(); ++v) {
    std::uint32_t rev = 0;
    for (int b = 0; b < arity_; ++b)
      if ((v >> b) & 1u) rev |= 1u << (arity_ - 1 - b);
    t.set_bit(rev, bit(v));
  }
  return t;
}

WolframCode wolfram_code(const TruthTable& table) {
  return WolframCode{table.code(), table.arity()};
}

bool eval(const TruthTable& table, const BitConfig& input) {
  if (input.length() != table.arity())
    throw std::invalid_argument("input length does not match arity");
  return table.bit(static_cast<std::uint32_t>(input.value()));
}

bool is_bipermutive(const TruthTable& table) {
  const int d = table.arity();
  if (d < 2)
    throw std::invalid_argument("bipermutivity needs arity >= 2");
  const std::uint32_t top = 1u << (d - 1);
  for (std::uint32_t v = 0; v < table.size(); ++v) {
    if (table.bit(v) == table.bit(v ^ top)) return false;  // x1 side
    if (table.bit(v) == table.bit(v ^ 1u)) return false;   // xd side
  }
  return true;
}

const char* to_string(DegreeClass cls) {
  switch (cls) {
    case DegreeClass::Constant: return "constant";
    case DegreeClass::Linear: return "linear";
    case DegreeClass::Affine: return "affine";
    case DegreeClass::Nonlinear: return "nonlinear";
  }
  return "?";
}

Anf::Anf(int arity, std::array<std::uint64_t, 4> coefficients)
    : coeffs_(coefficients), arity_(checked_arity(arity)) {
  const std::uint32_t n = 1u << arity_;
  for (std::uint32_t i = n; i < 256; ++i)  // clear bits beyond 2^arity
    coeffs_[i >> 6] &= ~(1ull << (i & 63));
  for (std::uint32_t m = 0; m < n; ++m)
    if (coefficient(m)) degree_ = std::max(degree_, std::popcount(m));
}

std::vector<std::uint32_t> Anf::monomials() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << arity_); ++m)
    if (coefficient(m)) out.push_back(m);
  return out;
}

namespace {

// In-place fast Moebius (binary XOR) transform; its own inverse.
void moebius(std::array<std::uint64_t, 4>& bits, int arity) {
  const std::uint32_t n = 1u << arity;
  auto get = [&](std::uint32_t i) {
    return (bits[i >> 6] >> (i & 63)) & 1ull;
  };
  auto flip = [&](std::uint32_t i) { bits[i >> 6] ^= 1ull << (i & 63); };
  for (std::uint32_t step = 1; step < n; step <<= 1)
    for (std::uint32_t v = 0; v < n; ++v)
      if ((v & step) && get(v ^ step)) flip(v);
}

}  // namespace

TruthTable Anf::to_table() const {
  auto bits = coeffs_;
  moebius(bits, arity_);
  TruthTable t(arity_);
  for (std::uint32_t v = 0; v < (1u << arity_); ++v)
    t.set_bit(v, (bits[v >> 6] >> (v & 63)) & 1ull);
  return t;
}

Anf anf(const TruthTable& table) {
  std::array<std::uint64_t, 4> bits{};
  for (std::uint32_t v = 0; v < table.size(); ++v)
    if (table.bit(v)) bits[v >> 6] |= 1ull << (v & 63);
  moebius(bits, table.arity());
  return Anf(table.arity(), bits);
}

DegreeClass degree_class(const TruthTable& table) {
  const Anf a = anf(table);
  if (a.degree() == 0) return DegreeClass::Constant;
  if (a.degree() == 1)
    return a.coefficient(0) ? DegreeClass::Affine : DegreeClass::Linear;
  return DegreeClass::Nonlinear;
}

}  // namespace latca
