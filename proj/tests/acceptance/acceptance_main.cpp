// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Each check pins its expected values and time bounds in
// code; nothing is deferred to calibration.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "latca/bipermutive_rule.hpp"
#include "latca/ca.hpp"
#include "latca/latin_square.hpp"
#include "latca/search.hpp"
#include "latca/truth_table.hpp"
#include "latca/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("criterion %d (%s): %s%s%s\n", number, name.c_str(),
              pass ? "PASS" : "FAIL", detail.empty() ? "" : " - ",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

// 1. d=6 census: exactly 472 invertible generating functions, 456 of degree
//    >= 2, in under 5 seconds single-threaded.
void criterion1() {
  const auto t0 = Clock::now();
  const auto r = latca::enumerate_invertible(6, {.jobs = 1});
  const auto elapsed = ms_since(t0);
  const std::uint64_t invertible = r.invertible_codes.size();
  const std::uint64_t nonlinear = r.count(latca::DegreeClass::Nonlinear);
  const bool pass = invertible == 472 && nonlinear == 456 && elapsed < 5000;
  report(1, "d=6 census 472/456", pass,
         "invertible=" + std::to_string(invertible) +
             " nonlinear=" + std::to_string(nonlinear) + " in " +
             std::to_string(elapsed) + " ms");
}

// 2. d=4 and d=5: every invertible generating function has degree <= 1.
void criterion2() {
  std::string detail;
  bool pass = true;
  for (int d : {4, 5}) {
    const auto r = latca::enumerate_invertible(d);
    const std::uint64_t nonlinear = r.count(latca::DegreeClass::Nonlinear);
    pass = pass && nonlinear == 0 && !r.invertible_codes.empty();
    detail += "d=" + std::to_string(d) + " invertible=" +
              std::to_string(r.invertible_codes.size()) + " nonlinear=" +
              std::to_string(nonlinear) + " ";
  }
  report(2, "small diameters are linear-only", pass, detail);
}

// 3. Diagonal-permutation verdict equals PBCA invertibility for every
//    generating function of arity <= 3, zero discrepancies, under 1 second.
void criterion3() {
  const auto t0 = Clock::now();
  std::uint64_t checked = 0, mismatches = 0;
  for (int d = 3; d <= 5; ++d) {
    const int arity = d - 2;
    for (std::uint64_t code = 0; code < (1ull << (1u << arity)); ++code) {
      const latca::TruthTable g = latca::TruthTable::from_code(arity, code);
      const bool diag =
          latca::diagonal_is_permutation(latca::BipermutiveRule(d, g));
      const bool inv = latca::is_invertible(latca::PbcaMap{g, d - 1});
      ++checked;
      if (diag != inv) ++mismatches;
    }
  }
  const auto elapsed = ms_since(t0);
  const bool pass = mismatches == 0 && elapsed < 1000;
  report(3, "diagonal/PBCA equivalence d=3..5", pass,
         std::to_string(checked) + " generators, " +
             std::to_string(mismatches) + " discrepancies in " +
             std::to_string(elapsed) + " ms");
}

// 4. Latin iff bipermutive over all 256 arity-3 and 65536 arity-4 rules,
//    zero discrepancies, under 30 seconds.
void criterion4() {
  const auto t0 = Clock::now();
  std::uint64_t checked = 0, mismatches = 0;
  for (int d : {3, 4}) {
    for (std::uint64_t code = 0; code < (1ull << (1u << d)); ++code) {
      const latca::TruthTable t = latca::TruthTable::from_code(d, code);
      const bool latin = latca::is_latin(latca::build_square(t));
      const bool bip = latca::is_bipermutive(t);
      ++checked;
      if (latin != bip) ++mismatches;
    }
  }
  const auto elapsed = ms_since(t0);
  const bool pass = mismatches == 0 && elapsed < 30000;
  report(4, "latin/bipermutive equivalence arity 3 and 4", pass,
         std::to_string(checked) + " rules, " + std::to_string(mismatches) +
             " discrepancies in " + std::to_string(elapsed) + " ms");
}

// 5. chi = x1^x2^x2x3 induces invertible PBCA at sizes 3, 5, 7 and
//    non-invertible ones at sizes 4 and 6.
void criterion5() {
  const latca::TruthTable chi = latca::TruthTable::from_code(3, 180);
  bool pass = true;
  std::string detail;
  for (int size : {3, 4, 5, 6, 7}) {
    const bool inv = latca::is_invertible(latca::PbcaMap{chi, size});
    const bool expected = size % 2 == 1;
    pass = pass && inv == expected;
    detail += "n=" + std::to_string(size) + ":" + (inv ? "inv" : "non") + " ";
  }
  report(5, "chi parity", pass, detail);
}

// 6. The d=6 rule with g = x1^x3^x1x4 yields an order-32 Latin square whose
//    main diagonal is a transversal, under 1 second.
void criterion6() {
  const auto t0 = Clock::now();
  const latca::TruthTable g = latca::TruthTable::from_code(4, 0x99cc);
  const auto square =
      latca::build_square(latca::expand(latca::BipermutiveRule(6, g)));
  const bool latin = latca::is_latin(square);
  const bool diagonal =
      latca::is_transversal(square, latca::diagonal_coords(square.order()));
  const auto elapsed = ms_since(t0);
  const bool pass =
      square.order() == 32 && latin && diagonal && elapsed < 1000;
  report(6, "order-32 figure square", pass,
         std::string("latin=") + (latin ? "yes" : "no") +
             " diagonal-transversal=" + (diagonal ? "yes" : "no") + " in " +
             std::to_string(elapsed) + " ms");
}

// 7. The rule-150 square decomposes into 4 disjoint transversals whose mate
//    is orthogonal, under 1 second.
void criterion7() {
  const auto t0 = Clock::now();
  const auto square =
      latca::build_square(latca::TruthTable::from_code(3, 150));
  const auto result = latca::find_disjoint_decomposition(square);
  bool pass = result.outcome == latca::DecompositionOutcome::Found;
  std::string detail;
  if (pass) {
    const auto mate = latca::mate_from_decomposition(*result.decomposition);
    const bool ortho = latca::are_orthogonal(square, mate);
    pass = latca::is_latin(mate) && ortho;
    detail = std::string("mate found, orthogonal=") + (ortho ? "yes" : "no");
  } else {
    detail = "no decomposition found";
  }
  const auto elapsed = ms_since(t0);
  pass = pass && elapsed < 1000;
  detail += " in " + std::to_string(elapsed) + " ms";
  report(7, "rule-150 orthogonal mate witness", pass, detail);
}

// 8. The d=6 report is byte-identical across parallelism 1, 2 and 8
//    (wall time normalized, as it reflects the run, not the result).
void criterion8() {
  auto normalized = [](int jobs) {
    return latca::report_to_json(latca::enumerate_invertible(6, {.jobs = jobs}),
                                 false);
  };
  const std::string r1 = normalized(1);
  const std::string r2 = normalized(2);
  const std::string r8 = normalized(8);
  const bool pass = r1 == r2 && r1 == r8;
  report(8, "deterministic reports across jobs 1/2/8", pass,
         pass ? "byte-identical" : "reports differ");
}

// 9. The invertible sets at d=3..6 are closed under complement and
//    variable reversal.
void criterion9() {
  bool pass = true;
  std::string detail;
  for (int d = 3; d <= 6; ++d) {
    const auto r = latca::verify_closure(d);
    pass = pass && r.pass;
    detail += "d=" + std::to_string(d) + ":" + (r.pass ? "ok" : "violated") +
              " ";
    if (!r.pass) detail += "(" + r.counterexample + ") ";
  }
  report(9, "complement and reversal closure", pass, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures == 0)
    std::printf("all 9 criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
