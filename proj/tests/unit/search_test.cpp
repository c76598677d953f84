#include "latca/search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "latca/bipermutive_rule.hpp"
#include "latca/ca.hpp"

using latca::DegreeClass;
using latca::SearchOptions;
using latca::SearchReport;
using latca::TruthTable;

namespace fs = std::filesystem;

TEST_CASE("d=3: the two 1-variable bijections") {
  const SearchReport r = latca::enumerate_invertible(3);
  CHECK(r.total_generators == 4);
  CHECK(r.invertible_codes == std::vector<std::uint64_t>{1, 2});
  CHECK(r.count(DegreeClass::Linear) == 1);   // x
  CHECK(r.count(DegreeClass::Affine) == 1);   // x ^ 1
  CHECK(r.count(DegreeClass::Constant) == 0);
  CHECK(r.count(DegreeClass::Nonlinear) == 0);
}

TEST_CASE("d=4 and d=5 ground truth: only degree <= 1 rules") {
  const SearchReport r4 = latca::enumerate_invertible(4);
  CHECK(r4.total_generators == 16);
  CHECK(r4.invertible_codes == std::vector<std::uint64_t>{3, 5, 10, 12});
  CHECK(r4.count(DegreeClass::Linear) == 2);
  CHECK(r4.count(DegreeClass::Affine) == 2);
  CHECK(r4.count(DegreeClass::Nonlinear) == 0);

  const SearchReport r5 = latca::enumerate_invertible(5);
  CHECK(r5.total_generators == 256);
  CHECK(r5.invertible_codes ==
        std::vector<std::uint64_t>{15, 51, 85, 105, 150, 170, 204, 240});
  CHECK(r5.count(DegreeClass::Linear) == 4);
  CHECK(r5.count(DegreeClass::Affine) == 4);
  CHECK(r5.count(DegreeClass::Nonlinear) == 0);
}

TEST_CASE("d=6 census matches the published counts") {
  const SearchReport r = latca::enumerate_invertible(6);
  CHECK(r.total_generators == 65536);
  CHECK(r.invertible_codes.size() == 472);
  CHECK(r.count(DegreeClass::Nonlinear) == 456);
  CHECK(r.count(DegreeClass::Linear) == 8);
  CHECK(r.count(DegreeClass::Affine) == 8);
  CHECK(r.count(DegreeClass::Constant) == 0);
  CHECK(std::binary_search(r.invertible_codes.begin(),
                           r.invertible_codes.end(), 0x99ccull));
}

TEST_CASE("search rejects out-of-range diameters") {
  CHECK_THROWS_AS(latca::enumerate_invertible(2), std::invalid_argument);
  CHECK_THROWS_AS(latca::enumerate_invertible(8), std::invalid_argument);
}

TEST_CASE("cross-module oracle: search set equals the diagonal verdicts") {
  for (int d = 3; d <= 5; ++d) {
    const SearchReport r = latca::enumerate_invertible(d);
    std::vector<std::uint64_t> via_diagonal;
    for (std::uint64_t code = 0; code < r.total_generators; ++code) {
      const latca::BipermutiveRule rule(d, TruthTable::from_code(d - 2, code));
      if (latca::diagonal_is_permutation(rule)) via_diagonal.push_back(code);
    }
    CHECK(r.invertible_codes == via_diagonal);
  }
}

TEST_CASE("reports are deterministic across parallelism levels") {
  const SearchReport r1 = latca::enumerate_invertible(6, {.jobs = 1});
  const SearchReport r2 = latca::enumerate_invertible(6, {.jobs = 2});
  const SearchReport r8 = latca::enumerate_invertible(6, {.jobs = 8});
  const std::string b1 = latca::report_to_json(r1, false);
  CHECK(b1 == latca::report_to_json(r2, false));
  CHECK(b1 == latca::report_to_json(r8, false));
}

TEST_CASE("invertible sets are closed under complement and reversal") {
  for (int d = 3; d <= 6; ++d) {
    const SearchReport r = latca::enumerate_invertible(d);
    CHECK(!r.invertible_codes.empty());
    CHECK(r.invertible_codes.size() % 2 == 0);  // complement pairs
    for (std::uint64_t code : r.invertible_codes) {
      const TruthTable g = TruthTable::from_code(d - 2, code);
      CHECK(std::binary_search(r.invertible_codes.begin(),
                               r.invertible_codes.end(),
                               g.complemented().code()));
      CHECK(std::binary_search(r.invertible_codes.begin(),
                               r.invertible_codes.end(), g.reversed().code()));
    }
  }
}

TEST_CASE("filter_by_class partitions the invertible list") {
  const SearchReport r = latca::enumerate_invertible(6);
  const auto nonlinear = latca::filter_by_class(r, DegreeClass::Nonlinear);
  CHECK(nonlinear.size() == 456);
  CHECK(std::binary_search(nonlinear.begin(), nonlinear.end(), 0x99ccull));

  const SearchReport r5 = latca::enumerate_invertible(5);
  CHECK(latca::filter_by_class(r5, DegreeClass::Nonlinear).empty());

  std::vector<std::uint64_t> merged;
  for (auto cls : {DegreeClass::Constant, DegreeClass::Linear,
                   DegreeClass::Affine, DegreeClass::Nonlinear}) {
    const auto part = latca::filter_by_class(r, cls);
    merged.insert(merged.end(), part.begin(), part.end());
  }
  std::sort(merged.begin(), merged.end());
  CHECK(merged == r.invertible_codes);
}

TEST_CASE("spot_check accepts correct reports and names planted faults") {
  const SearchReport good = latca::enumerate_invertible(3);
  CHECK(latca::spot_check(good, 8, 42).pass);

  SearchReport missing = good;
  missing.invertible_codes = {1};  // dropped code 2
  const auto miss = latca::spot_check(missing, 8, 42);
  CHECK(!miss.pass);
  CHECK(miss.counterexample == 2);

  SearchReport extra = good;
  extra.invertible_codes = {0, 1, 2};  // planted code 0
  const auto ex = latca::spot_check(extra, 8, 42);
  CHECK(!ex.pass);
  CHECK(ex.counterexample == 0);

  const SearchReport d6 = latca::enumerate_invertible(6);
  CHECK(latca::spot_check(d6, 32, 7).pass);
}

TEST_CASE("report json round-trips") {
  const SearchReport r = latca::enumerate_invertible(4);
  const std::string j = latca::report_to_json(r);
  const SearchReport back = latca::report_from_json(j);
  CHECK(back.diameter == r.diameter);
  CHECK(back.total_generators == r.total_generators);
  CHECK(back.invertible_codes == r.invertible_codes);
  CHECK(back.class_counts == r.class_counts);
  CHECK(back.wall_time == r.wall_time);

  CHECK(j.find("\"diameter\": 4") != std::string::npos);
  CHECK(j.find("\"invertible\"") != std::string::npos);
  CHECK(j.find("\"10\"") != std::string::npos);  // codes as decimal strings
}

TEST_CASE("csv summary line") {
  const SearchReport r = latca::enumerate_invertible(4);
  CHECK(latca::report_csv_header() ==
        "diameter,total,invertible,constant,linear,affine,nonlinear,"
        "wall_time_ms");
  const std::string line = latca::report_csv_line(r);
  CHECK(line.rfind("4,16,4,0,2,2,0,", 0) == 0);
}

TEST_CASE("d=7 checkpoints resume and finish the tail of the sweep") {
  const std::uint64_t total = 1ull << 32;
  const std::uint64_t tail = 1ull << 16;
  const std::uint64_t start = total - tail;

  const fs::path dir =
      fs::temp_directory_path() / "latca-search-test";
  fs::create_directories(dir);
  const std::string ckpt = (dir / "d7.json.ckpt").string();
  {
    std::ofstream out(ckpt, std::ios::trunc);
    out << "{\"diameter\":7,\"next_code\":\"" << start
        << "\",\"invertible\":[\"1\",\"2\",\"3\"]}\n";
  }

  SearchOptions opts;
  opts.jobs = 2;
  opts.checkpoint_path = ckpt;
  opts.resume = true;
  opts.checkpoint_interval = 1ull << 14;
  const SearchReport r = latca::enumerate_invertible(7, opts);

  CHECK(r.diameter == 7);
  CHECK(r.total_generators == total);
  CHECK(!fs::exists(ckpt));  // removed on completion

  // The fabricated prefix is carried over untouched; the tail is rescanned
  // and must match a direct evaluation.
  std::vector<std::uint64_t> expected{1, 2, 3};
  const latca::PbcaWindowTable wt(5, 6);
  for (std::uint64_t code = start; code < total; ++code)
    if (latca::pbca_code_invertible(code, wt)) expected.push_back(code);
  CHECK(r.invertible_codes == expected);

  fs::remove_all(dir);
}
