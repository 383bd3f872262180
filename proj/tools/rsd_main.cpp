// Copyright 2026 The rsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsd/cli/commands.hpp"
#include "rsd/cli/output_writer.hpp"
#include "rsd/version.hpp"

namespace {

namespace fs = std::filesystem;
using rsd::cli::RunConfig;

struct Options {
  std::string config_path;
  std::string input;
  std::string metric;
  std::string out;
  std::string counts;
  std::optional<unsigned> threads;
  std::vector<std::string> runs;
};

RunConfig resolve_config(const Options& opt) {
  RunConfig config = opt.config_path.empty()
                         ? rsd::cli::config_from_json(rsd::analysis::Json::object())
                         : rsd::cli::load_config_file(opt.config_path);
  if (opt.threads) {
    config.analysis.threads = *opt.threads;
  }
  if (!opt.counts.empty()) {
    try {
      config.reference_counts = rsd::analysis::counts_from_json(
          rsd::analysis::Json::parse(rsd::cli::read_file(opt.counts)));
    } catch (const nlohmann::json::exception& e) {
      throw rsd::Error(rsd::ErrorKind::kConfig,
                       "counts file " + opt.counts + " is not valid JSON: " +
                           e.what());
    }
  }
  if (!opt.metric.empty()) {
    config.metric = rsd::analysis::parse_metric(opt.metric);
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Risk spot detection on recorded vehicle trajectories"};
  app.set_version_flag("--version", std::string(rsd::kVersion));
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON run configuration")
        ->check(CLI::ExistingFile);
    sub->add_option("--threads", opt.threads,
                    "worker threads (0 = available cores)");
  };

  CLI::App* stats = app.add_subcommand("stats", "dataset kinematics statistics");
  add_common(stats);
  stats->add_option("--input", opt.input, "trajectory CSV")->required();
  stats->add_option("--out", opt.out, "output directory")->required();

  CLI::App* analyze =
      app.add_subcommand("analyze", "evaluate a metric, bin it and map it");
  add_common(analyze);
  analyze->add_option("--input", opt.input, "trajectory CSV")->required();
  analyze->add_option("--metric", opt.metric, "RSD_front, RSD_all, TH or TTC");
  analyze->add_option("--out", opt.out, "output directory")->required();
  analyze->add_option("--counts", opt.counts,
                      "reference counts JSON from a TH run")
      ->check(CLI::ExistingFile);

  CLI::App* compare =
      app.add_subcommand("compare", "compare two or more analyze outputs");
  compare->add_option("runs", opt.runs, "analyze output directories")
      ->required()
      ->expected(2, -1);
  compare->add_option("--out", opt.out,
                      "directory for compare.json (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (stats->parsed()) {
      rsd::cli::run_stats(resolve_config(opt), opt.input, opt.out);
    } else if (analyze->parsed()) {
      const RunConfig config = resolve_config(opt);
      if (!config.metric) {
        std::cerr << "error: no metric given; pass --metric or set 'metric' in "
                     "the config\n";
        return 2;
      }
      rsd::cli::run_analyze(config, opt.input, *config.metric, opt.out);
    } else if (compare->parsed()) {
      std::vector<fs::path> runs(opt.runs.begin(), opt.runs.end());
      const auto report = rsd::cli::run_compare(runs);
      if (opt.out.empty()) {
        std::cout << report.dump(2) << '\n';
      } else {
        rsd::cli::OutputWriter(opt.out).write_json("compare.json", report);
      }
    }
  } catch (const rsd::Error& e) {
    std::cerr << "error [" << rsd::to_string(e.kind()) << "]: " << e.what()
              << '\n';
    return rsd::cli::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
