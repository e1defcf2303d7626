#ifndef MORLEY_REPORT_HPP
#define MORLEY_REPORT_HPP

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "morley/geometry.hpp"
#include "morley/pipeline.hpp"

namespace morley {

struct RunConfig {
  int degree = 8;
  int precision_bits = 128;
  std::vector<std::string> steps;  // empty with steps_given=false means all
  bool steps_given = false;
  std::string format = "text";  // "json" or "text"
  std::string output;           // empty = stdout
  bool scan = false;
  int grid = 50;
  std::array<Rational, 6> params = CevianParams::trisector().t;
  bool inject_fault = false;

  CevianParams cevian_params() const {
    CevianParams p;
    p.t = params;
    return p;
  }

  // First configuration problem, if any.
  std::optional<std::string> validate() const {
    if (format != "json" && format != "text")
      return "format must be json or text";
    if (scan) {
      if (grid < 1) return "grid resolution must be >= 1";
      if (!cevian_params().admissible())
        return "cevian fractions must be positive with the pairwise sums below 1";
      return std::nullopt;
    }
    if (degree < 8)
      return "series degree must be >= 8 (the pipeline extracts a degree-7 "
             "coefficient)";
    if (precision_bits < 64) return "precision must be >= 64 bits";
    if (steps_given) {
      for (const auto& id : steps) {
        if (!find_step(id)) return "unknown step id: " + id;
      }
    }
    return std::nullopt;
  }
};

struct Report {
  int schema = 1;
  RunConfig config;
  std::vector<StepResult> steps;
  std::string verdict;  // "verified" iff every selected step verified
  std::string warning;

  static Report build(const RunConfig& cfg, std::vector<StepResult> results) {
    Report rep;
    rep.config = cfg;
    rep.steps = std::move(results);
    bool all_ok = true;
    for (const auto& s : rep.steps)
      all_ok = all_ok && s.status == StepStatus::verified;
    rep.verdict = all_ok ? "verified" : "failed";
    if (rep.steps.empty())
      rep.warning = "empty step selection: verdict is vacuous";
    return rep;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema"] = schema;
    j["config"] = {{"degree", config.degree},
                   {"precision_bits", config.precision_bits},
                   {"format", config.format},
                   {"output", config.output}};
    j["config"]["steps"] = config.steps_given
                               ? nlohmann::json(config.steps)
                               : nlohmann::json("all");
    j["steps"] = nlohmann::json::array();
    nlohmann::json constants = nlohmann::json::object();
    for (const auto& s : steps) {
      j["steps"].push_back({{"id", s.id},
                            {"claim", s.claim},
                            {"status", to_string(s.status)},
                            {"witness", s.witness},
                            {"anchor", s.anchor},
                            {"millis", s.millis}});
      if (!s.constants.empty()) {
        nlohmann::json c = nlohmann::json::object();
        for (const auto& [name, value] : s.constants)
          c[name] = value.fraction_str();
        constants[s.id] = std::move(c);
      }
    }
    j["constants"] = std::move(constants);
    j["verdict"] = verdict;
    if (!warning.empty()) j["warning"] = warning;
    return j;
  }

  static Report from_json(const nlohmann::json& j) {
    Report rep;
    rep.schema = j.at("schema").get<int>();
    const auto& jc = j.at("config");
    rep.config.degree = jc.at("degree").get<int>();
    rep.config.precision_bits = jc.at("precision_bits").get<int>();
    rep.config.format = jc.at("format").get<std::string>();
    rep.config.output = jc.at("output").get<std::string>();
    if (jc.at("steps").is_string()) {
      rep.config.steps_given = false;
    } else {
      rep.config.steps_given = true;
      rep.config.steps = jc.at("steps").get<std::vector<std::string>>();
    }
    for (const auto& js : j.at("steps")) {
      StepResult s;
      s.id = js.at("id").get<std::string>();
      s.claim = js.at("claim").get<std::string>();
      std::string status = js.at("status").get<std::string>();
      s.status = status == "verified" ? StepStatus::verified
                 : status == "failed" ? StepStatus::failed
                                      : StepStatus::skipped;
      s.witness = js.at("witness").get<std::string>();
      s.anchor = js.at("anchor").get<std::string>();
      s.millis = js.at("millis").get<long long>();
      if (j.at("constants").contains(s.id)) {
        for (const auto& [name, value] : j.at("constants").at(s.id).items())
          s.constants.emplace_back(name, Rational::parse(value.get<std::string>()));
      }
      rep.steps.push_back(std::move(s));
    }
    rep.verdict = j.at("verdict").get<std::string>();
    if (j.contains("warning")) rep.warning = j.at("warning").get<std::string>();
    return rep;
  }

  std::string render_text() const {
    std::ostringstream out;
    out << "derivation check  degree=" << config.degree
        << "  precision=" << config.precision_bits << " bits\n\n";
    for (const auto& s : steps) {
      out << s.id << "  " << to_string(s.status) << "  (" << s.millis
          << " ms)  " << s.claim << "\n";
      if (!s.witness.empty()) out << "      " << s.witness << "\n";
      for (const auto& [name, value] : s.constants)
        out << "      " << name << " = " << value.str() << "\n";
    }
    out << "\nverdict: " << verdict << "\n";
    if (!warning.empty()) out << "warning: " << warning << "\n";
    return out.str();
  }
};

inline std::string render_report(const Report& rep, const std::string& format) {
  if (format == "json") return rep.to_json().dump(2) + "\n";
  return rep.render_text();
}

}  // namespace morley

#endif  // MORLEY_REPORT_HPP
