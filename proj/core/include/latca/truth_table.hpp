#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latca/bit_config.hpp"

namespace latca {

struct WolframCode;

/// Truth table of a Boolean function on up to 8 variables, stored as the
/// 2^arity-bit output string. The bit at index v is the value of the
/// function on the input whose MSB-first integer encoding is v (x1 is the
/// most significant bit), which matches the classic Wolfram numbering:
/// rule 90 at arity 3 is x1^x3.
///
/// Arity 0 is allowed and denotes a single constant bit; it is what the
/// generating function of a diameter-2 rule degenerates to.
class TruthTable {
 public:
  /// Zero function of the given arity.
  explicit TruthTable(int arity);

  /// Builds a table from its integer code (bit v of `code` = output on v).
  /// Only defined for arity <= 6, where the code fits a 64-bit word.
  static TruthTable from_code(int arity, std::uint64_t code);

  /// Parses the hex serialization: plain hex digits, lowest-index output
  /// bit in the least significant position ("5a" == rule 90 at arity 3).
  static TruthTable from_hex(int arity, std::string_view hex);

  static TruthTable from_wolfram(const WolframCode& wc);

  int arity() const noexcept { return arity_; }
  std::uint32_t size() const noexcept { return 1u << arity_; }

  bool bit(std::uint32_t index) const noexcept {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void set_bit(std::uint32_t index, bool v);

  /// Integer code; requires arity <= 6.
  std::uint64_t code() const;

  /// Lowercase hex string, zero-padded to ceil(2^arity / 4) digits.
  std::string hex() const;

  /// Pointwise complement: f ^ 1.
  TruthTable complemented() const;

  /// Variable reversal: g'(x1,...,xk) = g(xk,...,x1).
  TruthTable reversed() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::array<std::uint64_t, 4> words_{};  // 2^8 bits max, unused bits zero
  int arity_ = 0;
};

/// Decimal encoding of a truth table with an explicit arity. Capped at
/// arity 6 so the value fits an unsigned 64-bit integer; larger rules are
/// serialized as hex truth tables instead.
struct WolframCode {
  std::uint64_t value = 0;
  int arity = 0;

  friend bool operator==(const WolframCode&, const WolframCode&) = default;
};

WolframCode wolfram_code(const TruthTable& table);

/// Applies the function to one input vector; input length must equal arity.
bool eval(const TruthTable& table, const BitConfig& input);

/// True iff flipping x1 always flips the output and flipping xd always
/// flips the output, i.e. f(x1,...,xd) = x1 ^ g(x2,...,x_{d-1}) ^ xd for
/// some g. Requires arity >= 2.
bool is_bipermutive(const TruthTable& table);

enum class DegreeClass { Constant, Linear, Affine, Nonlinear };

const char* to_string(DegreeClass cls);

/// Algebraic normal form: XOR of monomials. The coefficient bit at monomial
/// mask m is the coefficient of the product of the variables selected by m,
/// with the same MSB-first mask convention as truth-table indices (variable
/// x_j <-> mask bit arity-j).
class Anf {
 public:
  Anf(int arity, std::array<std::uint64_t, 4> coefficients);

  int arity() const noexcept { return arity_; }
  bool coefficient(std::uint32_t monomial) const noexcept {
    return (coeffs_[monomial >> 6] >> (monomial & 63)) & 1u;
  }

  /// Max size of a monomial with a set coefficient; 0 for the zero function.
  int degree() const noexcept { return degree_; }

  /// Set monomial masks in ascending order.
  std::vector<std::uint32_t> monomials() const;

  /// Inverse transform back to the truth table (the transform is an
  /// involution, so this is the same butterfly).
  TruthTable to_table() const;

  friend bool operator==(const Anf&, const Anf&) = default;

 private:
  std::array<std::uint64_t, 4> coeffs_{};
  int arity_ = 0;
  int degree_ = 0;
};

/// Fast Moebius transform of the truth table.
Anf anf(const TruthTable& table);

/// Constant (degree 0), linear (degree 1, no constant term), affine
/// (degree 1 with constant term), or nonlinear (degree >= 2).
DegreeClass degree_class(const TruthTable& table);

}  // namespace latca
