// latca command-line frontend: construct CA-generated Latin squares, check
// diagonal transversals, search generating functions, and export figures.
//
// Exit codes: 0 affirmative verdict / success, 1 negative verdict, 2 usage
// or contract error, 3 resource limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "latca/bipermutive_rule.hpp"
#include "latca/ca.hpp"
#include "latca/errors.hpp"
#include "latca/generator_spec.hpp"
#include "latca/latin_square.hpp"
#include "latca/search.hpp"
#include "latca/square_export.hpp"
#include "latca/truth_table.hpp"
#include "latca/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string mask_path_for(const std::string& out) {
  fs::path p(out);
  const std::string ext = p.extension().string();
  if (ext.empty()) return out + ".mask";
  fs::path q = p;
  q.replace_extension();
  return q.string() + ".mask" + ext;
}

const char* yesno(bool v) { return v ? "yes" : "no"; }

struct SearchArgs {
  int diameter = 0;
  int jobs = 1;
  std::string out;
  std::string csv;
  bool resume = false;
  int spot_samples = 0;
  std::uint64_t seed = 1;
};

int run_search(const SearchArgs& a) {
  latca::SearchOptions opts;
  opts.jobs = a.jobs;
  opts.resume = a.resume;
  if (a.diameter == 7 && !a.out.empty()) opts.checkpoint_path = a.out + ".ckpt";
  const latca::SearchReport report =
      latca::enumerate_invertible(a.diameter, opts);

  if (!a.out.empty()) write_file(a.out, latca::report_to_json(report));
  if (!a.csv.empty()) {
    const bool fresh = !fs::exists(a.csv) || fs::file_size(a.csv) == 0;
    std::ofstream out(a.csv, std::ios::app);
    if (!out) throw std::invalid_argument("cannot write " + a.csv);
    if (fresh) out << latca::report_csv_header() << '\n';
    out << latca::report_csv_line(report) << '\n';
  }

  std::cout << "d=" << report.diameter
            << " invertible=" << report.invertible_codes.size()
            << " nonlinear=" << report.count(latca::DegreeClass::Nonlinear)
            << '\n';

  if (a.spot_samples > 0) {
    const auto check = latca::spot_check(report, a.spot_samples, a.seed);
    std::cout << "spot-check: " << (check.pass ? "pass" : "fail");
    if (!check.pass) std::cout << " (" << check.detail << ")";
    std::cout << '\n';
    if (!check.pass) return kExitNo;
  }
  return kExitYes;
}

struct SquareArgs {
  std::string generator;
  int diameter = 0;
  std::string format = "csv";
  std::string out;
  bool mark_diagonal = false;
};

int run_square(const SquareArgs& a) {
  const latca::TruthTable g =
      latca::parse_generator(a.generator, a.diameter - 2);
  const latca::BipermutiveRule rule(a.diameter, g);
  const latca::LatinSquareGrid square = latca::build_square(latca::expand(rule));
  const latca::SquareFormat fmt = latca::parse_square_format(a.format);

  write_file(a.out, latca::export_square(square, fmt));
  std::cout << "order: " << square.order() << '\n';
  std::cout << "out: " << a.out << '\n';
  if (a.mark_diagonal) {
    const std::string mpath = mask_path_for(a.out);
    write_file(mpath,
               latca::export_mask(square.order(),
                                  latca::diagonal_coords(square.order()), fmt));
    std::cout << "mask: " << mpath << '\n';
  }
  return kExitYes;
}

struct CheckArgs {
  std::string generator;
  int diameter = 0;
  std::optional<std::string> shift;
  int cap = latca::kDefaultInvertibilityCap;
};

int run_check(const CheckArgs& a) {
  const latca::TruthTable g =
      latca::parse_generator(a.generator, a.diameter - 2);
  const latca::BipermutiveRule rule(a.diameter, g);
  const bool invertible =
      latca::is_invertible(latca::PbcaMap{g, a.diameter - 1}, a.cap);

  bool transversal;
  if (a.shift) {
    const latca::BitConfig c = latca::BitConfig::parse(*a.shift);
    transversal = latca::shifted_diagonal_is_transversal(rule, c, a.cap);
    std::cout << "shift: " << c.str() << '\n';
    std::cout << "shifted-transversal: " << yesno(transversal) << '\n';
  } else {
    transversal = latca::diagonal_is_permutation(rule, a.cap);
    std::cout << "diagonal-transversal: " << yesno(transversal) << '\n';
  }
  std::cout << "pbca-invertible: " << yesno(invertible) << '\n';
  return transversal ? kExitYes : kExitNo;
}

struct VerifyArgs {
  std::string property;
  int diameter = 0;
  std::optional<std::uint64_t> inject_fault;
};

int run_verify(const VerifyArgs& a) {
  latca::VerifyResult r;
  if (a.property == "lemma1") {
    r = latca::verify_lemma1(a.diameter);
  } else if (a.property == "theorem1") {
    r = latca::verify_theorem1(a.diameter, a.inject_fault);
  } else if (a.property == "closure") {
    r = latca::verify_closure(a.diameter);
  } else {
    throw std::invalid_argument("unknown property '" + a.property + "'");
  }
  std::cout << "property: " << a.property << '\n';
  std::cout << "diameter: " << a.diameter << '\n';
  std::cout << "checked: " << r.checked << '\n';
  std::cout << "result: " << (r.pass ? "pass" : "fail") << '\n';
  if (!r.pass) std::cout << "counterexample: " << r.counterexample << '\n';
  return r.pass ? kExitYes : kExitNo;
}

struct MateArgs {
  std::string generator;
  int diameter = 0;
  std::uint64_t budget = latca::kDefaultNodeBudget;
  std::string out;
  std::string format = "csv";
};

int run_mate(const MateArgs& a) {
  const latca::TruthTable g =
      latca::parse_generator(a.generator, a.diameter - 2);
  const latca::BipermutiveRule rule(a.diameter, g);
  const latca::LatinSquareGrid square = latca::build_square(latca::expand(rule));

  const auto result = latca::find_disjoint_decomposition(square, a.budget);
  switch (result.outcome) {
    case latca::DecompositionOutcome::None:
      std::cout << "decomposition: none\n";
      return kExitNo;
    case latca::DecompositionOutcome::Unknown:
      std::cout << "decomposition: unknown (budget exhausted)\n";
      return kExitResource;
    case latca::DecompositionOutcome::Found:
      break;
  }

  const latca::LatinSquareGrid mate =
      latca::mate_from_decomposition(*result.decomposition);
  const bool latin = latca::is_latin(mate);
  const bool ortho = latca::are_orthogonal(square, mate);
  std::cout << "decomposition: found\n";
  std::cout << "mate-latin: " << yesno(latin) << '\n';
  std::cout << "orthogonal: " << yesno(ortho) << '\n';

  if (!a.out.empty()) {
    const latca::SquareFormat fmt = latca::parse_square_format(a.format);
    write_file(a.out, latca::export_square(mate, fmt));
    std::cout << "mate: " << a.out << '\n';
  }
  return latin && ortho ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Latin squares from bipermutive cellular automata"};
  app.require_subcommand(1);

  SearchArgs search_args;
  auto* search = app.add_subcommand(
      "search", "Enumerate invertible generating functions of a diameter");
  search->add_option("--diameter,-d", search_args.diameter, "Rule diameter")
      ->required()
      ->check(CLI::Range(3, 7));
  search->add_option("--jobs,-j", search_args.jobs, "Worker threads")
      ->check(CLI::Range(1, 256));
  search->add_option("--out,-o", search_args.out, "Report JSON path");
  search->add_option("--csv", search_args.csv,
                     "Append a one-line CSV summary to this file");
  search->add_flag("--resume", search_args.resume,
                   "Resume a checkpointed d=7 sweep (needs --out)");
  search->add_option("--spot-check", search_args.spot_samples,
                     "Re-verify this many sampled codes per side");
  search->add_option("--seed", search_args.seed, "Spot-check RNG seed");

  SquareArgs square_args;
  auto* square = app.add_subcommand(
      "square", "Build the Latin square of a bipermutive rule and export it");
  square
      ->add_option("--generator,-g", square_args.generator,
                   "Generating function (hex truth table or ANF expression)")
      ->required();
  square->add_option("--diameter,-d", square_args.diameter, "Rule diameter")
      ->required()
      ->check(CLI::Range(2, 8));
  square->add_option("--format,-f", square_args.format,
                     "Output format: csv, json or pgm");
  square->add_option("--out,-o", square_args.out, "Output path")->required();
  square->add_flag("--mark-diagonal", square_args.mark_diagonal,
                   "Also write a mask file marking the main diagonal");

  CheckArgs check_args;
  std::string shift_str;
  auto* check = app.add_subcommand(
      "check", "Decide whether the (shifted) diagonal is a transversal");
  check
      ->add_option("--generator,-g", check_args.generator,
                   "Generating function (hex truth table or ANF expression)")
      ->required();
  check->add_option("--diameter,-d", check_args.diameter, "Rule diameter")
      ->required()
      ->check(CLI::Range(2, 8));
  auto* shift_opt = check->add_option(
      "--shift", shift_str, "XOR shift as a 0/1 string of d-1 cells");
  check->add_option("--cap", check_args.cap,
                    "Brute-force cap in cells (default 24)");

  VerifyArgs verify_args;
  std::uint64_t fault_code = 0;
  auto* verify = app.add_subcommand(
      "verify", "Run an exhaustive equivalence suite and report pass/fail");
  verify
      ->add_option("--property,-p", verify_args.property,
                   "lemma1, theorem1 or closure")
      ->required()
      ->check(CLI::IsMember({"lemma1", "theorem1", "closure"}));
  verify->add_option("--diameter,-d", verify_args.diameter, "Rule diameter")
      ->required();
  auto* fault_opt = verify->add_option(
      "--inject-fault", fault_code,
      "Self-test: flip the verdict for one generator code (theorem1 only)");

  MateArgs mate_args;
  auto* mate = app.add_subcommand(
      "mate", "Search a disjoint-transversal decomposition and emit the mate");
  mate->add_option("--generator,-g", mate_args.generator,
                   "Generating function (hex truth table or ANF expression)")
      ->required();
  mate->add_option("--diameter,-d", mate_args.diameter,
                   "Rule diameter (order 2^(d-1) is capped at 16)")
      ->required()
      ->check(CLI::Range(2, 5));
  mate->add_option("--budget", mate_args.budget, "Search node budget");
  mate->add_option("--out,-o", mate_args.out, "Mate square output path");
  mate->add_option("--format,-f", mate_args.format,
                   "Mate output format: csv, json or pgm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (search->parsed()) return run_search(search_args);
    if (square->parsed()) return run_square(square_args);
    if (check->parsed()) {
      if (shift_opt->count() > 0) check_args.shift = shift_str;
      return run_check(check_args);
    }
    if (verify->parsed()) {
      if (fault_opt->count() > 0) verify_args.inject_fault = fault_code;
      return run_verify(verify_args);
    }
    if (mate->parsed()) return run_mate(mate_args);
  } catch (const latca::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
