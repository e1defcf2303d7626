// Command-line driver: runs the derivation checker and writes the report,
// or scans the angle grid for equilaterality defects.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morley/report.hpp"

namespace {

using morley::Rational;

// "1/3", "0.34", or "2" as an exact rational.
Rational parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) return Rational::parse(s);
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational::parse(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::string denom = "1" + std::string(s.size() - dot - 1, '0');
  return Rational::parse(digits + "/" + denom);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  f << content;
  return 0;
}

int run_scan(const morley::RunConfig& cfg) {
  morley::ScanReport rep =
      morley::equilateral_scan(cfg.grid, cfg.cevian_params());
  std::ostringstream csv;
  morley::write_scan_csv(rep, csv);
  if (int rc = write_output(cfg.output, csv.str())) return rc;
  std::cerr << "max defect " << rep.max_defect << " at alpha=" << rep.worst.alpha
            << " beta=" << rep.worst.beta << " over " << cfg.grid << "x"
            << cfg.grid << " grid\n";
  return 0;
}

int run_checks(const morley::RunConfig& cfg) {
  morley::PipelineConfig pcfg;
  pcfg.degree = cfg.degree;
  pcfg.precision_bits = cfg.precision_bits;
  pcfg.corrupt_system = cfg.inject_fault;
  std::vector<morley::StepResult> results;
  bool vacuous = cfg.steps_given && cfg.steps.empty();
  if (!vacuous) {
    try {
      results = morley::run_pipeline(pcfg, cfg.steps_given
                                               ? cfg.steps
                                               : std::vector<std::string>{});
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  morley::Report report = morley::Report::build(cfg, std::move(results));
  if (int rc = write_output(cfg.output, morley::render_report(report, cfg.format)))
    return rc;
  if (!cfg.output.empty()) {
    int verified = 0;
    for (const auto& s : report.steps)
      verified += s.status == morley::StepStatus::verified;
    std::cerr << verified << "/" << report.steps.size() << " steps verified ("
              << report.verdict << ")\n";
  }
  return report.verdict == "verified" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact checker for the converse Morley derivation: verifies every step "
      "of the elimination argument and the trisector identity, or scans the "
      "cevian configuration numerically."};
  app.get_formatter()->column_width(30);

  morley::RunConfig cfg;
  std::string steps_arg;
  std::string params_arg;

  app.add_option("--degree", cfg.degree,
                 "series truncation degree (>= 8; higher is slower)")
      ->capture_default_str();
  app.add_option("--precision", cfg.precision_bits,
                 "certified-enclosure precision in bits (>= 64)")
      ->capture_default_str();
  auto* steps_opt = app.add_option(
      "--steps", steps_arg, "comma-separated subset of step ids, e.g. S04,S29");
  app.add_option("--format", cfg.format, "report format: json or text")
      ->capture_default_str();
  app.add_option("-o,--output", cfg.output, "write the report (or CSV) here");
  app.add_flag("--scan", cfg.scan,
               "scan an angle grid for equilaterality defects instead of "
               "running the checks");
  app.add_option("--grid", cfg.grid, "scan grid resolution per axis")
      ->capture_default_str();
  app.add_option("--params", params_arg,
                 "scan cevian fractions t1,...,t6 (decimals or fractions; "
                 "default all 1/3)");
  app.add_flag("--inject-fault", cfg.inject_fault,
               "corrupt one system sign to exercise failure reporting")
      ->group("");  // testing aid; hidden from help

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (steps_opt->count() > 0) {
    cfg.steps_given = true;
    cfg.steps = split_csv(steps_arg);
  }
  if (!params_arg.empty()) {
    auto parts = split_csv(params_arg);
    if (parts.size() != 6) {
      std::cerr << "error: --params needs exactly six values\n";
      return 2;
    }
    try {
      for (size_t i = 0; i < 6; ++i) cfg.params[i] = parse_fraction(parts[i]);
    } catch (const std::exception& e) {
      std::cerr << "error: bad --params value: " << e.what() << "\n";
      return 2;
    }
  }

  if (auto problem = cfg.validate()) {
    std::cerr << "error: " << *problem << "\n";
    return 2;
  }
  return cfg.scan ? run_scan(cfg) : run_checks(cfg);
}
