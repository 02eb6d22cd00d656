#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tmsv/catalog.hpp"
#include "tmsv/errors.hpp"
#include "tmsv/io.hpp"

namespace {

int write_json(const tmsv::Json& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write report file: " << path << "\n";
    return 2;
  }
  out << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical matroid Schubert varieties: fans, cells, cohomology"};
  app.name("tmsv");
  app.fallthrough();
  app.require_subcommand(1);

  std::string matroid_arg, json_out, check = "all";
  int max_p = -1;
  bool force_large = false, seedless = false, quiet = false;
  app.add_option("--matroid", matroid_arg, "matroid document file or catalog:NAME");
  app.add_option("--max-p", max_p, "largest coefficient degree p (default: rank)");
  app.add_option("--json", json_out, "write the JSON report to this file");
  app.add_flag("--force-large", force_large,
               "run the geometric pipeline on ground sets larger than 6");
  app.add_flag("--seedless", seedless, "reserved; nothing here is randomized");
  app.add_flag("--quiet", quiet, "suppress console output");

  auto* cmd_info = app.add_subcommand("info", "matroid invariants");
  auto* cmd_fan = app.add_subcommand("fan", "augmented and flag fans");
  auto* cmd_faces = app.add_subcommand("faces", "cell complex and strata");
  auto* cmd_cohomology = app.add_subcommand("cohomology", "cohomology table");
  auto* cmd_spectral = app.add_subcommand("spectral", "filtration pages");
  auto* cmd_algebra = app.add_subcommand("algebra", "rings and the subalgebra verdict");
  auto* cmd_verify = app.add_subcommand("verify", "run verification checks");
  cmd_verify->add_option("check", check, "check name or 'all'");
  auto* cmd_export = app.add_subcommand("export-dot", "stratification poset as DOT");
  auto* cmd_catalog = app.add_subcommand("catalog", "list built-in matroids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&t0]() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  if (cmd_catalog->parsed()) {
    tmsv::Json report;
    report["catalog"] = tmsv::catalog_names();
    if (!json_out.empty()) {
      int rc = write_json(report, json_out);
      if (rc != 0) return rc;
    }
    if (!quiet) std::cout << report.dump(2) << "\n";
    return 0;
  }

  if (matroid_arg.empty()) {
    if (!quiet) std::cerr << "--matroid is required for this command\n";
    return 2;
  }

  tmsv::Matroid m;
  std::string name;
  try {
    m = tmsv::load_matroid(matroid_arg, &name);
  } catch (const tmsv::Error& e) {
    if (!quiet) std::cerr << e.what() << "\n";
    return 2;
  }

  const bool needs_guard = cmd_fan->parsed() || cmd_faces->parsed() ||
                           cmd_cohomology->parsed() || cmd_algebra->parsed();
  if (needs_guard && !tmsv::size_guard_ok(m, force_large)) {
    if (!quiet)
      std::cerr << "ground set has " << m.n()
                << " elements; pass --force-large to run anyway\n";
    return 2;
  }

  if (cmd_verify->parsed() && check != "all") {
    auto names = tmsv::check_names();
    if (std::find(names.begin(), names.end(), check) == names.end()) {
      if (!quiet) std::cerr << "unknown check: " << check << "\n";
      return 2;
    }
  }

  try {
    tmsv::Json report;
    std::string plain;
    bool failed = false;
    if (cmd_info->parsed()) {
      report = tmsv::info_report(m, name);
    } else if (cmd_fan->parsed()) {
      report = tmsv::fan_report(m, name);
    } else if (cmd_faces->parsed()) {
      report = tmsv::faces_report(m, name);
    } else if (cmd_cohomology->parsed()) {
      report = tmsv::cohomology_report(m, name, max_p);
    } else if (cmd_spectral->parsed()) {
      report = tmsv::spectral_report(m, name, max_p);
    } else if (cmd_algebra->parsed()) {
      report = tmsv::algebra_report(m, name);
    } else if (cmd_verify->parsed()) {
      tmsv::PipelineOptions opt;
      opt.max_p = max_p;
      opt.force_large = force_large;
      report = tmsv::verification_report(m, name, opt,
                                         check == "all" ? "" : check, &failed);
    } else if (cmd_export->parsed()) {
      plain = tmsv::export_stratification_dot(m);
      report["matroid"] = name;
      report["dot"] = plain;
    }
    if (!json_out.empty()) {
      int rc = write_json(report, json_out);
      if (rc != 0) return rc;
    }
    if (!quiet) {
      if (!plain.empty())
        std::cout << plain;
      else
        std::cout << report.dump(2) << "\n";
      std::cerr << "elapsed_ms: " << elapsed_ms() << "\n";
    }
    return failed ? 1 : 0;
  } catch (const tmsv::Error& e) {
    if (!quiet) std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    if (!quiet) std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
