#include "sfa/report.hpp"

#include <algorithm>
#include <cmath>

namespace sfa {

namespace {
constexpr double kResolved = 1e-4;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Skipped: return "skipped";
  }
  return "unknown";
}

double InequalityReport::scale() const {
  return std::max({std::abs(lhs.value), std::abs(rhs.value), 1e-300});
}

bool InequalityReport::preconditions_hold() const {
  for (const auto& [key, value] : flags) {
    if (kind == ReportKind::Implication && key == "premises") continue;
    if (key.rfind("info:", 0) == 0) continue;
    if (!value) return false;
  }
  return true;
}

void assign_verdict(InequalityReport& r) {
  r.margin = r.rhs.value - r.lhs.value;
  const double err = r.error_bar();
  if (!r.preconditions_hold()) {
    r.verdict = Verdict::Skipped;
    return;
  }
  if (!std::isfinite(r.margin) || !std::isfinite(err)) {
    r.verdict = Verdict::Inconclusive;
    return;
  }
  if (r.kind == ReportKind::Equality) {
    r.verdict = std::abs(r.margin) <= err ? Verdict::Holds : Verdict::Violated;
    return;
  }
  if (r.kind == ReportKind::Implication) {
    const auto it = r.flags.find("premises");
    if (it != r.flags.end() && !it->second) {
      r.verdict = Verdict::Holds;
      return;
    }
  }
  if (r.margin < -err) {
    r.verdict = Verdict::Violated;
  } else if (r.margin >= err || err <= kResolved * r.scale()) {
    r.verdict = Verdict::Holds;
  } else {
    r.verdict = Verdict::Inconclusive;
  }
}

InequalityReport make_report(const std::string& name, ReportKind kind, const FunctionalValue& lhs,
                             const FunctionalValue& rhs, std::map<std::string, bool> flags, double tolerance) {
  InequalityReport r;
  r.name = name;
  r.kind = kind;
  r.lhs = lhs;
  r.rhs = rhs;
  r.flags = std::move(flags);
  r.tolerance = tolerance;
  assign_verdict(r);
  return r;
}

FunctionalValue exact(double value, const std::string& formula) {
  FunctionalValue v;
  v.value = value;
  v.abs_error = 0.0;
  v.formula = formula;
  return v;
}

}  // namespace sfa
