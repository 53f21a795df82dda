#ifndef DYNDEG_TOOLS_CLI_HPP
#define DYNDEG_TOOLS_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dyndeg/degrees.hpp"
#include "dyndeg/instances.hpp"
#include "dyndeg/report.hpp"
#include "dyndeg/serialize.hpp"

namespace dyndeg::cli {

enum ExitCode : int { kOk = 0, kAssertionFailure = 1, kInputError = 2 };

struct RunConfig {
  std::vector<std::string> inputs;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  int count = 200;
  std::vector<std::string> types{"I", "II", "III", "IV"};
  std::string format = "csv";
  bool fail_fast = false;
  std::string out_path;
  int max_block = 4;
  int max_e0 = 3;
  std::string dist = "uniform";
  std::string key;
};

namespace detail {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses and validates every input; any problem is an input error.
inline std::vector<EndInstance> load_inputs(const std::vector<std::string>& paths) {
  std::vector<EndInstance> all;
  for (const auto& path : paths) {
    std::vector<EndInstance> batch;
    try {
      batch = parse_document(read_file(path));
    } catch (const Error& e) {
      throw InputError(path + ": " + e.what());
    }
    for (const auto& inst : batch) {
      try {
        validate(inst);
      } catch (const Error& e) {
        throw InputError(path + ": instance '" + inst.label + "': " + e.what());
      }
      all.push_back(inst);
    }
  }
  return all;
}

inline std::string render(const std::vector<ReportRow>& rows, const std::string& format, bool with_verdict) {
  return format == "json" ? format_json(rows) : format_csv(rows, with_verdict);
}

inline int emit(const std::string& text, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << cfg.out_path << "\n";
    return kInputError;
  }
  file << text;
  return kOk;
}

inline AlbertType type_from(const std::string& s) {
  auto t = parse_albert_type(s);
  if (!t) throw InputError("unknown Albert type '" + s + "' (expected I, II, III or IV)");
  return *t;
}

}  // namespace detail

/// Verifies every instance; only instances marked "assert" decide the exit status.
inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto instances = detail::load_inputs(cfg.inputs);
  std::vector<ReportRow> rows;
  int failures = 0;
  for (const auto& inst : instances) {
    try {
      ReportRow row{verify_main_theorem(inst, cfg.tol), std::nullopt};
      if (inst.assert_theorem) {
        row.verdict = row.report.passed() ? "pass" : "fail";
        if (!row.report.passed()) {
          ++failures;
          err << "FAIL " << inst.label << ": key_eq_residual=" << format_double(row.report.key_eq_residual)
              << " theorem_residual=" << format_double(row.report.theorem_residual)
              << " pairing_ok=" << (row.report.pairing_ok ? "true" : "false") << "\n";
        }
      } else {
        row.verdict = "reported";
      }
      rows.push_back(std::move(row));
    } catch (const Error& e) {
      err << (inst.assert_theorem ? "FAIL " : "skipped ") << inst.label << ": " << e.what() << "\n";
      if (inst.assert_theorem) ++failures;
    }
    if (cfg.fail_fast && failures > 0) break;
  }
  const int status = detail::emit(detail::render(rows, cfg.format, true), cfg, out, err);
  if (status != kOk) return status;
  return failures > 0 ? kAssertionFailure : kOk;
}

/// Tabulates degrees and entropies without asserting anything.
inline int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto instances = detail::load_inputs(cfg.inputs);
  std::vector<ReportRow> rows;
  int errors = 0;
  for (const auto& inst : instances) {
    try {
      rows.push_back({verify_main_theorem(inst, cfg.tol), std::nullopt});
    } catch (const Error& e) {
      err << "error: " << inst.label << ": " << e.what() << "\n";
      ++errors;
    }
  }
  const int status = detail::emit(detail::render(rows, cfg.format, false), cfg, out, err);
  if (status != kOk) return status;
  return errors > 0 ? kAssertionFailure : kOk;
}

/// Randomized key-equality campaign: cfg.count instances per requested type.
inline int cmd_random(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.count < 0) throw detail::InputError("--count must be non-negative");
  std::vector<AlbertType> types;
  for (const auto& s : cfg.types) types.push_back(detail::type_from(s));
  if (cfg.dist != "uniform" && cfg.dist != "normal") throw detail::InputError("--dist must be uniform or normal");

  std::vector<ReportRow> rows;
  int failures = 0;
  for (AlbertType type : types) {
    GeneratorConfig gen;
    gen.albert_type = type;
    gen.e0 = {1, cfg.max_e0};
    gen.max_block_size = cfg.max_block;
    gen.distribution = cfg.dist == "normal" ? EntryDistribution::Normal : EntryDistribution::Uniform;

    int passed = 0;
    int run = 0;
    double worst = -1.0;
    std::uint64_t worst_seed = cfg.seed;
    for (int k = 0; k < cfg.count; ++k) {
      gen.seed = cfg.seed + static_cast<std::uint64_t>(k);
      EndInstance inst;
      try {
        inst = random_instance(gen);
      } catch (const Error& e) {
        throw detail::InputError(e.what());
      }
      ++run;
      bool ok = false;
      std::string why;
      try {
        ReportRow row{verify_main_theorem(inst, cfg.tol), std::nullopt};
        ok = row.report.key_equality_ok();
        row.verdict = ok ? "pass" : "fail";
        if (row.report.key_eq_residual > worst) {
          worst = row.report.key_eq_residual;
          worst_seed = gen.seed;
        }
        why = "key_eq_residual=" + format_double(row.report.key_eq_residual);
        rows.push_back(std::move(row));
      } catch (const Error& e) {
        why = e.what();
      }
      if (ok) {
        ++passed;
      } else {
        ++failures;
        err << "FAIL type=" << to_string(type) << " seed=" << gen.seed << " " << why << "\n";
        err << "instance: " << serialize_instance(inst) << "\n";
        if (cfg.fail_fast) break;
      }
    }
    if (run > 0) {
      err << "type " << to_string(type) << ": " << passed << "/" << run
          << " passed, max key_eq_residual " << format_double(std::max(worst, 0.0)) << " at seed " << worst_seed
          << " (reproduce: dyndeg random --types " << to_string(type) << " --seed " << worst_seed
          << " --count 1 --max-block " << cfg.max_block << " --max-e0 " << cfg.max_e0 << " --dist " << cfg.dist
          << ")\n";
    }
    if (cfg.fail_fast && failures > 0) break;
  }
  const int status = detail::emit(detail::render(rows, cfg.format, true), cfg, out, err);
  if (status != kOk) return status;
  return failures > 0 ? kAssertionFailure : kOk;
}

/// Dumps the curated catalog as an instance document.
inline int cmd_catalog(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.key.empty()) {
    auto entry = catalog_entry(cfg.key);
    if (!entry) throw detail::InputError("no catalog entry '" + cfg.key + "'");
    return detail::emit(serialize_instance(entry->instance) + "\n", cfg, out, err);
  }
  std::vector<EndInstance> all;
  for (const auto& entry : catalog()) all.push_back(entry.instance);
  return detail::emit(serialize_batch(all) + "\n", cfg, out, err);
}

/// Entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamical degrees of abelian-variety endomorphisms", "dyndeg"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "relative tolerance in (0, 1e-2]")->envname("DYNDEG_TOL");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "write the report to this file");
  };

  auto* verify = app.add_subcommand("verify", "verify instance files");
  verify->add_option("files", cfg.inputs, "instance files")->required();
  add_tol(verify);
  add_output(verify);
  verify->add_flag("--fail-fast", cfg.fail_fast, "stop at the first asserted failure");

  auto* random = app.add_subcommand("random", "randomized key-equality campaign");
  add_tol(random);
  add_output(random);
  random->add_option("--seed", cfg.seed, "first seed");
  random->add_option("--count", cfg.count, "instances per type");
  random->add_option("--types", cfg.types, "comma-separated Albert types")->delimiter(',');
  random->add_option("--max-block", cfg.max_block, "largest block side")->check(CLI::Range(1, kMaxBlockSize));
  random->add_option("--max-e0", cfg.max_e0, "largest e0")->check(CLI::Range(1, 8));
  random->add_option("--dist", cfg.dist, "uniform or normal");
  random->add_flag("--fail-fast", cfg.fail_fast, "stop at the first failure");

  auto* cat = app.add_subcommand("catalog", "dump the curated catalog");
  cat->add_option("--key", cfg.key, "dump a single entry");
  cat->add_option("--out", cfg.out_path, "write to this file");

  auto* report = app.add_subcommand("report", "tabulate degrees and entropies");
  report->add_option("files", cfg.inputs, "instance files")->required();
  add_tol(report);
  add_output(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (!(cfg.tol > 0.0 && cfg.tol <= 1e-2)) {
    err << "error: --tol must lie in (0, 1e-2]\n";
    return kInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (random->parsed()) return cmd_random(cfg, out, err);
    if (cat->parsed()) return cmd_catalog(cfg, out, err);
    return cmd_report(cfg, out, err);
  } catch (const detail::InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace dyndeg::cli

#endif  // DYNDEG_TOOLS_CLI_HPP
