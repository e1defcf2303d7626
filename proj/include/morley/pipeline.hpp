#ifndef MORLEY_PIPELINE_HPP
#define MORLEY_PIPELINE_HPP

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "morley/a_series.hpp"
#include "morley/forms.hpp"

namespace morley {

struct PipelineConfig {
  int degree = 8;          // series truncation; the pipeline needs >= 8
  int precision_bits = 128;  // enclosure width for the exclusion certificates
  bool corrupt_system = false;  // fault injection: flips one sign in the system
};

enum class StepStatus { verified, failed, skipped };

inline const char* to_string(StepStatus s) {
  switch (s) {
    case StepStatus::verified: return "verified";
    case StepStatus::failed: return "failed";
    case StepStatus::skipped: return "skipped";
  }
  return "?";
}

struct StepResult {
  std::string id;
  StepStatus status = StepStatus::skipped;
  std::string claim;
  std::string check_kind;
  std::string anchor;
  std::string witness;  // discrepancy for failures, derived data otherwise
  std::vector<std::pair<std::string, Rational>> constants;
  long long millis = 0;

  void note(const std::string& text) {
    if (!witness.empty()) witness += "; ";
    witness += text;
  }
  void constant(const std::string& name, Rational value) {
    constants.emplace_back(name, std::move(value));
  }
};

// Thrown by step bodies when a required identity does not hold; the message
// is the witness.
struct StepFailure : std::runtime_error {
  explicit StepFailure(const std::string& witness) : std::runtime_error(witness) {}
};

inline void require(bool ok, const std::string& witness) {
  if (!ok) throw StepFailure(witness);
}

// Shared state across steps. The two series are the only expensive
// artifacts; everything else is cheap enough to rebuild.
class PipelineContext {
 public:
  explicit PipelineContext(PipelineConfig cfg) : cfg_(cfg) {
    if (cfg_.degree < 8)
      throw std::invalid_argument("pipeline: series degree must be >= 8");
    if (cfg_.precision_bits < 64)
      throw std::invalid_argument("pipeline: precision must be >= 64 bits");
  }

  const PipelineConfig& config() const { return cfg_; }
  int degree() const { return cfg_.degree; }

  const TruncSeries& full_A() {
    if (!full_A_) full_A_ = build_A(0, cfg_.degree);
    return *full_A_;
  }
  const TruncSeries& reduced_A() {
    if (!reduced_A_) reduced_A_ = build_reduced_A(cfg_.degree);
    return *reduced_A_;
  }
  const std::array<MultiPoly, 6>& system() {
    if (!system_) {
      system_ = generate_system();
      if (cfg_.corrupt_system) {
        // Flip the sign of the first equation's leading term.
        auto& e1 = (*system_)[0];
        auto lead = e1.leading();
        e1.add_term(lead.first, Rational(-2) * lead.second);
      }
    }
    return *system_;
  }

 private:
  PipelineConfig cfg_;
  std::optional<TruncSeries> full_A_;
  std::optional<TruncSeries> reduced_A_;
  std::optional<std::array<MultiPoly, 6>> system_;
};

struct DerivationStep {
  const char* id;
  const char* claim;
  const char* check_kind;
  const char* anchor;
  void (*run)(PipelineContext&, StepResult&);
};

const std::vector<DerivationStep>& step_registry();

inline const DerivationStep* find_step(const std::string& id) {
  for (const auto& s : step_registry()) {
    if (id == s.id) return &s;
  }
  return nullptr;
}

inline StepResult run_step(PipelineContext& ctx, const DerivationStep& step) {
  StepResult r;
  r.id = step.id;
  r.claim = step.claim;
  r.check_kind = step.check_kind;
  r.anchor = step.anchor;
  auto start = std::chrono::steady_clock::now();
  try {
    step.run(ctx, r);
    r.status = StepStatus::verified;
  } catch (const StepFailure& f) {
    r.status = StepStatus::failed;
    r.note(f.what());
  } catch (const std::exception& e) {
    r.status = StepStatus::failed;
    r.note(std::string("internal error: ") + e.what());
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

// Runs the registry in order; `ids` empty means all steps. Unknown ids throw.
inline std::vector<StepResult> run_pipeline(
    PipelineContext& ctx, const std::vector<std::string>& ids = {}) {
  std::vector<StepResult> out;
  if (ids.empty()) {
    for (const auto& s : step_registry()) out.push_back(run_step(ctx, s));
    return out;
  }
  for (const auto& id : ids) {
    const DerivationStep* s = find_step(id);
    if (!s) throw std::invalid_argument("unknown step id: " + id);
    out.push_back(run_step(ctx, *s));
  }
  return out;
}

inline std::vector<StepResult> run_pipeline(
    PipelineConfig cfg, const std::vector<std::string>& ids = {}) {
  PipelineContext ctx(cfg);
  return run_pipeline(ctx, ids);
}

// The step's primary derived constant (named "K" by convention).
inline Rational derived_constant(const std::vector<StepResult>& results,
                                 const std::string& step_id,
                                 const std::string& name = "K") {
  for (const auto& r : results) {
    if (r.id != step_id) continue;
    for (const auto& [n, v] : r.constants) {
      if (n == name) return v;
    }
    throw std::out_of_range("step " + step_id + " has no constant " + name);
  }
  throw std::out_of_range("no result for step " + step_id);
}

}  // namespace morley

#include "morley/steps.hpp"

#endif  // MORLEY_PIPELINE_HPP
