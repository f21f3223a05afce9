// Command-line front end: runs config-driven geometry/spectrum pipelines and
// writes CSV tables plus a JSON summary. See README for the config schema.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "minksurf/errors.hpp"
#include "minksurf/jobs.hpp"
#include "minksurf/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"minksurf: quantum dynamics on surfaces immersed in R^3_1"};
  app.set_version_flag("--version", std::string(minksurf::kVersion));

  std::string config_path;
  std::string out_dir = ".";
  bool validate_only = false;
  bool quiet = false;
  app.add_option("--config", config_path, "JSON job config (schema \"1\")")->required();
  app.add_option("--out-dir", out_dir, "output directory (created if missing)");
  app.add_flag("--validate-only", validate_only, "check the config and exit");
  app.add_flag("--quiet", quiet, "suppress progress output");

  CLI11_PARSE(app, argc, argv);

  if (validate_only) {
    try {
      const auto diags = minksurf::jobs::validate_config(config_path);
      for (const auto& d : diags) std::cerr << "error: " << d << "\n";
      if (diags.empty() && !quiet) std::cerr << "config ok\n";
      return diags.empty() ? 0 : 2;
    } catch (const minksurf::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return minksurf::jobs::run_job(config_path, out_dir, quiet);
}
