#include "latca/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "latca/ca.hpp"
#include "json.hpp"

namespace latca {

namespace {

namespace fs = std::filesystem;

void check_diameter(int d) {
  if (d < 3 || d > 7)
    throw std::invalid_argument("search diameter must be in [3, 7]");
}

std::uint64_t total_for(int diameter) {
  const int arity = diameter - 2;      // <= 5
  return 1ull << (1u << arity);        // 2^(2^arity), <= 2^32
}

struct Checkpoint {
  int diameter = 0;
  std::uint64_t next_code = 0;
  std::vector<std::uint64_t> invertible;
};

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read checkpoint " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  Checkpoint ck;
  ck.diameter = j.at("diameter").get<int>();
  ck.next_code = std::stoull(j.at("next_code").get<std::string>());
  for (const auto& s : j.at("invertible"))
    ck.invertible.push_back(std::stoull(s.get<std::string>()));
  return ck;
}

void store_checkpoint(const std::string& path, const Checkpoint& ck) {
  nlohmann::ordered_json j;
  j["diameter"] = ck.diameter;
  j["next_code"] = std::to_string(ck.next_code);
  auto& codes = j["invertible"] = nlohmann::json::array();
  for (std::uint64_t c : ck.invertible) codes.push_back(std::to_string(c));
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump() << '\n';
  }
  fs::rename(tmp, path);  // atomic replace
}

std::vector<std::uint64_t> scan_range(std::uint64_t begin, std::uint64_t end,
                                      const PbcaWindowTable& wt) {
  std::vector<std::uint64_t> found;
  for (std::uint64_t g = begin; g < end; ++g)
    if (pbca_code_invertible(g, wt)) found.push_back(g);
  return found;
}

}  // namespace

SearchReport enumerate_invertible(int diameter, const SearchOptions& options) {
  check_diameter(diameter);
  const auto t0 = std::chrono::steady_clock::now();

  const int arity = diameter - 2;
  const int size = diameter - 1;
  const std::uint64_t total = total_for(diameter);

  const bool checkpointing =
      diameter == 7 && !options.checkpoint_path.empty();
  std::uint64_t start = 0;
  std::vector<std::uint64_t> prior;
  if (checkpointing && options.resume && fs::exists(options.checkpoint_path)) {
    Checkpoint ck = load_checkpoint(options.checkpoint_path);
    if (ck.diameter != diameter)
      throw std::invalid_argument("checkpoint diameter mismatch");
    if (ck.next_code > total)
      throw std::invalid_argument("checkpoint progress out of range");
    start = ck.next_code;
    prior = std::move(ck.invertible);
  }

  const PbcaWindowTable wt(arity, size);
  const int jobs = std::max(1, options.jobs);

  // Contiguous chunks merged by index keep the result canonical no matter
  // how workers interleave. Checkpoints are written whenever the completed
  // prefix crosses an interval boundary.
  std::uint64_t chunk;
  if (checkpointing) {
    chunk = std::max<std::uint64_t>(1, options.checkpoint_interval);
  } else {
    chunk = std::clamp<std::uint64_t>(
        total / (static_cast<std::uint64_t>(jobs) * 8), 1024, 1u << 16);
  }
  const std::uint64_t span = total - start;
  const std::size_t num_chunks =
      span == 0 ? 0 : static_cast<std::size_t>((span + chunk - 1) / chunk);

  std::vector<std::vector<std::uint64_t>> results(num_chunks);
  std::vector<char> done(num_chunks, 0);
  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  std::size_t frontier = 0;  // chunks [0, frontier) are done

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= num_chunks) return;
      const std::uint64_t begin = start + static_cast<std::uint64_t>(i) * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      auto found = scan_range(begin, end, wt);
      std::lock_guard<std::mutex> lock(merge_mutex);
      results[i] = std::move(found);
      done[i] = 1;
      bool advanced = false;
      while (frontier < num_chunks && done[frontier]) {
        ++frontier;
        advanced = true;
      }
      if (checkpointing && advanced && frontier < num_chunks) {
        Checkpoint ck;
        ck.diameter = diameter;
        ck.next_code = start + static_cast<std::uint64_t>(frontier) * chunk;
        ck.invertible = prior;
        for (std::size_t k = 0; k < frontier; ++k)
          ck.invertible.insert(ck.invertible.end(), results[k].begin(),
                               results[k].end());
        try {
          store_checkpoint(options.checkpoint_path, ck);
        } catch (const std::exception&) {
          // A failed checkpoint write costs resumability, not correctness;
          // the sweep carries on.
        }
      }
    }
  };

  if (num_chunks > 0) {
    std::vector<std::thread> threads;
    const int nthreads = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(jobs), num_chunks));
    threads.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  SearchReport report;
  report.diameter = diameter;
  report.total_generators = total;
  report.invertible_codes = std::move(prior);
  for (auto& part : results)
    report.invertible_codes.insert(report.invertible_codes.end(), part.begin(),
                                   part.end());
  for (std::uint64_t code : report.invertible_codes) {
    const DegreeClass cls = degree_class(TruthTable::from_code(arity, code));
    ++report.class_counts[static_cast<int>(cls)];
  }

  if (checkpointing && fs::exists(options.checkpoint_path))
    fs::remove(options.checkpoint_path);

  report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return report;
}

std::vector<std::uint64_t> filter_by_class(const SearchReport& report,
                                           DegreeClass cls) {
  const int arity = report.diameter - 2;
  std::vector<std::uint64_t> out;
  for (std::uint64_t code : report.invertible_codes)
    if (degree_class(TruthTable::from_code(arity, code)) == cls)
      out.push_back(code);
  return out;
}

namespace {

// Deterministic draw of `count` distinct values from a population given by
// a membership test, independent of the standard library's distribution
// implementations.
std::vector<std::uint64_t> sample_distinct(
    std::mt19937_64& rng, std::uint64_t population_size, int count,
    const std::vector<std::uint64_t>& sorted_excluded, bool from_excluded) {
  std::vector<std::uint64_t> out;
  const std::uint64_t excluded = sorted_excluded.size();
  const std::uint64_t available =
      from_excluded ? excluded : population_size - excluded;
  const int want = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(count), available));
  if (want == 0) return out;

  if (from_excluded) {
    // Sample indices into the list itself.
    std::vector<std::uint64_t> idx(sorted_excluded.begin(),
                                   sorted_excluded.end());
    for (int i = 0; i < want; ++i) {
      const std::size_t j =
          static_cast<std::size_t>(i) +
          static_cast<std::size_t>(rng() % (idx.size() - i));
      std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
      out.push_back(idx[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  if (population_size <= (1ull << 20)) {
    std::vector<std::uint64_t> pool;
    pool.reserve(population_size - excluded);
    std::size_t e = 0;
    for (std::uint64_t v = 0; v < population_size; ++v) {
      if (e < sorted_excluded.size() && sorted_excluded[e] == v) {
        ++e;
        continue;
      }
      pool.push_back(v);
    }
    for (int i = 0; i < want; ++i) {
      const std::size_t j =
          static_cast<std::size_t>(i) +
          static_cast<std::size_t>(rng() % (pool.size() - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  // Huge population: rejection sampling; collisions are vanishingly rare.
  std::unordered_set<std::uint64_t> taken;
  while (static_cast<int>(out.size()) < want) {
    const std::uint64_t v = rng() % population_size;
    if (std::binary_search(sorted_excluded.begin(), sorted_excluded.end(), v))
      continue;
    if (!taken.insert(v).second) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace

SpotCheckResult spot_check(const SearchReport& report, int samples,
                           std::uint64_t seed) {
  const int arity = report.diameter - 2;
  const int size = report.diameter - 1;
  const PbcaWindowTable wt(arity, size);
  std::mt19937_64 rng(seed);

  SpotCheckResult result;
  const auto listed = sample_distinct(rng, report.total_generators, samples,
                                      report.invertible_codes, true);
  for (std::uint64_t code : listed) {
    if (!pbca_code_invertible(code, wt)) {
      result.pass = false;
      result.counterexample = code;
      result.detail = "listed code " + std::to_string(code) +
                      " is not invertible";
      return result;
    }
  }
  const auto unlisted = sample_distinct(rng, report.total_generators, samples,
                                        report.invertible_codes, false);
  for (std::uint64_t code : unlisted) {
    if (pbca_code_invertible(code, wt)) {
      result.pass = false;
      result.counterexample = code;
      result.detail = "unlisted code " + std::to_string(code) +
                      " is invertible";
      return result;
    }
  }
  result.pass = true;
  result.detail = "verified " + std::to_string(listed.size()) + " listed and " +
                  std::to_string(unlisted.size()) + " unlisted codes";
  return result;
}

std::string report_to_json(const SearchReport& report, bool include_wall_time) {
  nlohmann::ordered_json j;
  j["diameter"] = report.diameter;
  j["total"] = report.total_generators;
  auto& codes = j["invertible"] = nlohmann::json::array();
  for (std::uint64_t c : report.invertible_codes)
    codes.push_back(std::to_string(c));
  j["classes"] = {
      {"constant", report.count(DegreeClass::Constant)},
      {"linear", report.count(DegreeClass::Linear)},
      {"affine", report.count(DegreeClass::Affine)},
      {"nonlinear", report.count(DegreeClass::Nonlinear)},
  };
  if (include_wall_time) j["wall_time_ms"] = report.wall_time.count();
  return j.dump(2) + "\n";
}

SearchReport report_from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SearchReport r;
  r.diameter = j.at("diameter").get<int>();
  r.total_generators = j.at("total").get<std::uint64_t>();
  for (const auto& s : j.at("invertible"))
    r.invertible_codes.push_back(std::stoull(s.get<std::string>()));
  const auto& cls = j.at("classes");
  r.class_counts[static_cast<int>(DegreeClass::Constant)] =
      cls.at("constant").get<std::uint64_t>();
  r.class_counts[static_cast<int>(DegreeClass::Linear)] =
      cls.at("linear").get<std::uint64_t>();
  r.class_counts[static_cast<int>(DegreeClass::Affine)] =
      cls.at("affine").get<std::uint64_t>();
  r.class_counts[static_cast<int>(DegreeClass::Nonlinear)] =
      cls.at("nonlinear").get<std::uint64_t>();
  if (j.contains("wall_time_ms"))
    r.wall_time = std::chrono::milliseconds(
        j.at("wall_time_ms").get<std::int64_t>());
  return r;
}

std::string report_csv_header() {
  return "diameter,total,invertible,constant,linear,affine,nonlinear,"
         "wall_time_ms";
}

std::string report_csv_line(const SearchReport& report) {
  std::string s;
  s += std::to_string(report.diameter);
  s += ',';
  s += std::to_string(report.total_generators);
  s += ',';
  s += std::to_string(report.invertible_codes.size());
  s += ',';
  s += std::to_string(report.count(DegreeClass::Constant));
  s += ',';
  s += std::to_string(report.count(DegreeClass::Linear));
  s += ',';
  s += std::to_string(report.count(DegreeClass::Affine));
  s += ',';
  s += std::to_string(report.count(DegreeClass::Nonlinear));
  s += ',';
  s += std::to_string(report.wall_time.count());
  return s;
}

}  // namespace latca
