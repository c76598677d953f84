#include "latca/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "latca/bipermutive_rule.hpp"
#include "latca/ca.hpp"
#include "latca/latin_square.hpp"
#include "latca/search.hpp"
#include "latca/truth_table.hpp"

namespace latca {

VerifyResult verify_lemma1(int diameter) {
  if (diameter < 2 || diameter > 4)
    throw std::invalid_argument(
        "lemma1 suite scans all 2^(2^d) rules, feasible for d in [2, 4]");
  const std::uint64_t total = 1ull << (1u << diameter);
  VerifyResult r;
  for (std::uint64_t code = 0; code < total; ++code) {
    const TruthTable t = TruthTable::from_code(diameter, code);
    const bool latin = is_latin(build_square(t));
    const bool bip = is_bipermutive(t);
    ++r.checked;
    if (latin != bip) {
      r.pass = false;
      r.counterexample = "rule code " + std::to_string(code) + ": latin=" +
                         (latin ? "yes" : "no") + " bipermutive=" +
                         (bip ? "yes" : "no");
      return r;
    }
  }
  r.pass = true;
  return r;
}

VerifyResult verify_theorem1(int diameter,
                             std::optional<std::uint64_t> inject_fault) {
  if (diameter < 2 || diameter > 6)
    throw std::invalid_argument(
        "theorem1 suite scans all generators, feasible for d in [2, 6]");
  const int arity = diameter - 2;
  const std::uint64_t total = 1ull << (1u << arity);
  VerifyResult r;
  for (std::uint64_t code = 0; code < total; ++code) {
    const TruthTable g = TruthTable::from_code(arity, code);
    const BipermutiveRule rule(diameter, g);
    bool diag = diagonal_is_permutation(rule);
    if (inject_fault && *inject_fault == code) diag = !diag;
    const bool inv = is_invertible(PbcaMap{g, diameter - 1});
    ++r.checked;
    if (diag != inv) {
      r.pass = false;
      r.counterexample = "generator code " + std::to_string(code) +
                         ": diagonal-permutation=" + (diag ? "yes" : "no") +
                         " pbca-invertible=" + (inv ? "yes" : "no");
      return r;
    }
  }
  r.pass = true;
  return r;
}

VerifyResult verify_closure(int diameter) {
  if (diameter < 3 || diameter > 6)
    throw std::invalid_argument("closure suite is feasible for d in [3, 6]");
  const int arity = diameter - 2;
  const SearchReport report = enumerate_invertible(diameter);
  const auto& codes = report.invertible_codes;
  VerifyResult r;
  for (std::uint64_t code : codes) {
    const TruthTable g = TruthTable::from_code(arity, code);
    const std::uint64_t comp = g.complemented().code();
    const std::uint64_t rev = g.reversed().code();
    ++r.checked;
    if (!std::binary_search(codes.begin(), codes.end(), comp)) {
      r.pass = false;
      r.counterexample = "complement of invertible code " +
                         std::to_string(code) + " (= " + std::to_string(comp) +
                         ") is missing";
      return r;
    }
    if (!std::binary_search(codes.begin(), codes.end(), rev)) {
      r.pass = false;
      r.counterexample = "reversal of invertible code " +
                         std::to_string(code) + " (= " + std::to_string(rev) +
                         ") is missing";
      return r;
    }
  }
  r.pass = true;
  return r;
}

}  // namespace latca
