#include "latca/bit_config.hpp"

#include <stdexcept>

#include "doctest.h"

using latca::BitConfig;

TEST_CASE("round-trips between 0/1 strings and values") {
  CHECK(BitConfig::parse("011").value() == 3);
  CHECK(BitConfig::parse("011").length() == 3);
  CHECK(BitConfig(5, 3).str() == "101");
  CHECK(BitConfig::parse("0").str() == "0");
  CHECK(BitConfig(0, 0).str() == "");
}

TEST_CASE("cells are 1-based, cell 1 leftmost") {
  const BitConfig x = BitConfig::parse("100");
  CHECK(x.cell(1));
  CHECK(!x.cell(2));
  CHECK(!x.cell(3));
  CHECK_THROWS_AS(x.cell(0), std::invalid_argument);
  CHECK_THROWS_AS(x.cell(4), std::invalid_argument);
}

TEST_CASE("concat, rotation, xor") {
  const BitConfig a = BitConfig::parse("10");
  const BitConfig b = BitConfig::parse("011");
  CHECK(a.concat(b).str() == "10011");
  CHECK(BitConfig::parse("1011").rotated_left().str() == "0111");
  CHECK(BitConfig::parse("1011").rotated_left(4) == BitConfig::parse("1011"));
  CHECK((BitConfig::parse("1100") ^ BitConfig::parse("1010")).str() == "0110");
  CHECK_THROWS_AS(BitConfig::parse("01") ^ BitConfig::parse("011"),
                  std::invalid_argument);
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(BitConfig::parse("01x"), std::invalid_argument);
  CHECK_THROWS_AS(BitConfig(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(BitConfig(0, 65), std::invalid_argument);
}
