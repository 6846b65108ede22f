#pragma once

#include <map>
#include <string>

#include "sfa/types.hpp"

namespace sfa {

enum class Verdict { Holds, Violated, Inconclusive, Skipped };

const char* verdict_name(Verdict v);

enum class ReportKind {
  Inequality,   // lhs <= rhs
  Equality,     // lhs == rhs
  Implication,  // premises => lhs <= rhs
};

// One checked statement, oriented so that margin = rhs - lhs >= 0 means it holds.
struct InequalityReport {
  std::string name;
  ReportKind kind = ReportKind::Inequality;
  FunctionalValue lhs;
  FunctionalValue rhs;
  double margin = 0.0;
  double tolerance = 0.0;
  std::map<std::string, bool> flags;  // hypotheses; any false one skips the verdict unless keyed "info:..."
  Verdict verdict = Verdict::Inconclusive;

  double error_bar() const { return lhs.abs_error + rhs.abs_error + tolerance; }
  double scale() const;
  double relative_margin() const { return margin / scale(); }
  bool preconditions_hold() const;
};

// Builds the report and assigns its verdict from the margin and the propagated error bars.
// An implication uses the flag "premises" as its antecedent and is never skipped.
InequalityReport make_report(const std::string& name, ReportKind kind, const FunctionalValue& lhs,
                             const FunctionalValue& rhs, std::map<std::string, bool> flags = {},
                             double tolerance = 0.0);

// Re-evaluates the verdict after fields were edited.
void assign_verdict(InequalityReport& r);

// Convenience constructor for exact scalars.
FunctionalValue exact(double value, const std::string& formula = "exact");

}  // namespace sfa
