#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace latca {

struct VerifyResult {
  bool pass = false;
  std::uint64_t checked = 0;
  std::string counterexample;  // empty when pass
};

/// Scans every truth table of arity d (2 <= d <= 4) and checks that the
/// generated square is Latin exactly when the rule is bipermutive.
VerifyResult verify_lemma1(int diameter);

/// Scans every generating function of arity d-2 (2 <= d <= 6) and checks
/// that the diagonal-permutation verdict equals PBCA invertibility at size
/// d-1. `inject_fault` flips the diagonal verdict for one generator code,
/// proving the suite can fail loudly.
VerifyResult verify_theorem1(
    int diameter, std::optional<std::uint64_t> inject_fault = std::nullopt);

/// Enumerates the invertible generator set (3 <= d <= 6) and checks its
/// closure under truth-table complement and variable reversal.
VerifyResult verify_closure(int diameter);

}  // namespace latca
