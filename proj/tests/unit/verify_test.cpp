#include "latca/verify.hpp"

#include <stdexcept>

#include "doctest.h"

TEST_CASE("lemma1 suite passes at d=3") {
  const auto r = latca::verify_lemma1(3);
  CHECK(r.pass);
  CHECK(r.checked == 256);
  CHECK(r.counterexample.empty());
}

TEST_CASE("theorem1 suite passes at d=3..5") {
  CHECK(latca::verify_theorem1(3).checked == 4);
  for (int d = 3; d <= 5; ++d) {
    const auto r = latca::verify_theorem1(d);
    CHECK(r.pass);
  }
}

TEST_CASE("an injected fault fails loudly with its counterexample") {
  const auto r = latca::verify_theorem1(4, 5);
  CHECK(!r.pass);
  CHECK(r.counterexample.find("generator code 5") != std::string::npos);
}

TEST_CASE("closure suite passes at d=3..5") {
  for (int d = 3; d <= 5; ++d) {
    const auto r = latca::verify_closure(d);
    CHECK(r.pass);
    CHECK(r.checked > 0);
  }
}

TEST_CASE("suites reject diameters beyond their scale") {
  CHECK_THROWS_AS(latca::verify_lemma1(5), std::invalid_argument);
  CHECK_THROWS_AS(latca::verify_theorem1(7), std::invalid_argument);
  CHECK_THROWS_AS(latca::verify_closure(7), std::invalid_argument);
  CHECK_THROWS_AS(latca::verify_closure(2), std::invalid_argument);
}
