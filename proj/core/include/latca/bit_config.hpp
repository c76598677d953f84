#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace latca {

/// Fixed-length bit vector of at most 64 cells.
///
/// Cell 1 is the leftmost cell and maps to the most significant of the
/// length() low bits of value(), so the integer value of a configuration
/// reads the same as its 0/1 string ("011" == value 3, length 3).
class BitConfig {
 public:
  BitConfig() = default;
  BitConfig(std::uint64_t value, int length);

  /// Parses a 0/1 string, cell 1 leftmost.
  static BitConfig parse(std::string_view zero_one);

  int length() const noexcept { return length_; }
  std::uint64_t value() const noexcept { return value_; }
  bool empty() const noexcept { return length_ == 0; }

  bool cell(int i) const;        // 1-based
  void set_cell(int i, bool v);  // 1-based

  BitConfig concat(const BitConfig& rhs) const;
  BitConfig rotated_left(int by = 1) const;
  BitConfig operator^(const BitConfig& rhs) const;

  /// 0/1 string, cell 1 leftmost.
  std::string str() const;

  friend bool operator==(const BitConfig&, const BitConfig&) = default;

 private:
  std::uint64_t value_ = 0;
  int length_ = 0;
};

}  // namespace latca
