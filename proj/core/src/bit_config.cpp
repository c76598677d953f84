#include "latca/bit_config.hpp"

#include <stdexcept>

namespace latca {

namespace {

std::uint64_t low_mask(int length) {
  return length >= 64 ? ~0ull : (1ull << length) - 1;
}

}  // namespace

BitConfig::BitConfig(std::uint64_t value, int length)
    : value_(value), length_(length) {
  if (length < 0 || length > 64)
    throw std::invalid_argument("BitConfig length must be in [0, 64]");
  if ((value & ~low_mask(length)) != 0)
    throw std::invalid_argument("BitConfig value does not fit its length");
}

BitConfig BitConfig::parse(std::string_view zero_one) {
  if (zero_one.size() > 64)
    throw std::invalid_argument("configuration longer than 64 cells");
  std::uint64_t v = 0;
  for (char c : zero_one) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("configuration must be a 0/1 string");
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitConfig(v, static_cast<int>(zero_one.size()));
}

bool BitConfig::cell(int i) const {
  if (i < 1 || i > length_)
    throw std::invalid_argument("cell index out of range");
  return (value_ >> (length_ - i)) & 1u;
}

void BitConfig::set_cell(int i, bool v) {
  if (i < 1 || i > length_)
    throw std::invalid_argument("cell index out of range");
  const std::uint64_t bit = 1ull << (length_ - i);
  value_ = v ? (value_ | bit) : (value_ & ~bit);
}

BitConfig BitConfig::concat(const BitConfig& rhs) const {
  if (length_ + rhs.length_ > 64)
    throw std::invalid_argument("concatenation exceeds 64 cells");
  return BitConfig((value_ << rhs.length_) | rhs.value_, length_ + rhs.length_);
}

BitConfig BitConfig::rotated_left(int by) const {
  if (length_ == 0) return *this;
  int k = ((by % length_) + length_) % length_;
  if (k == 0) return *this;
  const std::uint64_t m = low_mask(length_);
  return BitConfig(((value_ << k) | (value_ >> (length_ - k))) & m, length_);
}

BitConfig BitConfig::operator^(const BitConfig& rhs) const {
  if (length_ != rhs.length_)
    throw std::invalid_argument("XOR of configurations of different lengths");
  return BitConfig(value_ ^ rhs.value_, length_);
}

std::string BitConfig::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 1; i <= length_; ++i)
    if (cell(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  return s;
}

}  // namespace latca
