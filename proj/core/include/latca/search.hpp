#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latca/truth_table.hpp"

namespace latca {

/// Result of one exhaustive sweep over the 2^(2^(d-2)) generating functions
/// of diameter d: the codes whose size-(d-1) PBCA is invertible, in
/// ascending code order, with their degree-class census.
struct SearchReport {
  int diameter = 0;
  std::uint64_t total_generators = 0;
  std::vector<std::uint64_t> invertible_codes;      // strictly increasing
  std::array<std::uint64_t, 4> class_counts{};      // indexed by DegreeClass
  std::chrono::milliseconds wall_time{0};

  std::uint64_t count(DegreeClass cls) const {
    return class_counts[static_cast<int>(cls)];
  }
};

struct SearchOptions {
  int jobs = 1;

  /// Checkpoint file; only honored at diameter 7, where a full sweep is
  /// 2^32 candidates. Progress is persisted every checkpoint_interval codes
  /// and the file is removed on completion.
  std::string checkpoint_path{};
  bool resume = false;
  std::uint64_t checkpoint_interval = 1ull << 24;
};

/// Exhaustive enumeration, 3 <= diameter <= 7. The code range is split into
/// contiguous chunks handed to workers; chunk results are merged by chunk
/// index, so the report is deterministic and independent of the number of
/// jobs (wall_time aside).
SearchReport enumerate_invertible(int diameter,
                                  const SearchOptions& options = {});

/// The invertible codes in one degree class, order preserved.
std::vector<std::uint64_t> filter_by_class(const SearchReport& report,
                                           DegreeClass cls);

struct SpotCheckResult {
  bool pass = false;
  std::optional<std::uint64_t> counterexample;
  std::string detail;
};

/// Re-verifies `samples` listed codes (must be invertible) and `samples`
/// unlisted codes (must not be), drawn without replacement from a seeded
/// deterministic generator. Returns the first counterexample on failure.
SpotCheckResult spot_check(const SearchReport& report, int samples,
                           std::uint64_t seed);

/// JSON serialization:
/// {"diameter","total","invertible" (decimal strings),"classes",
///  "wall_time_ms"}. Pass include_wall_time = false to compare reports
/// byte-for-byte across runs.
std::string report_to_json(const SearchReport& report,
                           bool include_wall_time = true);
SearchReport report_from_json(std::string_view text);

/// One-line CSV summary for tabulation across diameters.
std::string report_csv_header();
std::string report_csv_line(const SearchReport& report);

}  // namespace latca
