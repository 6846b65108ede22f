#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sfa/bodies.hpp"
#include "sfa/report.hpp"

namespace sfa {

enum class ScanTarget {
  FloatingArea,  // Omega_p(K) <= Omega_p(C_K)
  Entropy,       // E(K) <= tan^{d-1} alpha_K
  StrongBound,   // Omega_p(K) <= P(C_K)^{d/(d+p)} P(C_K*)^{p/(d+p)}
  Euclidean,     // centro-affine entropy against the ball of equal volume
};

const char* target_name(ScanTarget t);
ScanTarget parse_target(const std::string& name);

struct ScanConfig {
  FamilySpec family;
  std::size_t count = 100;
  int level = 2;
  std::vector<ScanTarget> targets = {ScanTarget::FloatingArea, ScanTarget::Entropy, ScanTarget::StrongBound};
  std::vector<double> p_values = {1.0, 2.0};
  int threads = 1;  // speed only; the record stream does not depend on it
};

struct ScanRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;  // generator seed of this body
  std::string body;
  std::vector<InequalityReport> reports;
  double min_margin = 0.0;  // smallest relative margin over the reports
  std::string min_name;
  std::map<std::string, bool> flags;
  std::vector<std::string> persistent_violations;  // still violated at doubled resolution
  double reverified_margin = 0.0;                   // minimal relative margin at doubled resolution, if re-run
  bool reverified = false;
  std::string error;  // non-empty when the body could not be generated or evaluated
};

// Level giving roughly twice the nodes per direction of `level` for bodies of this family.
int doubled_level(const FamilySpec& family, int level);

// Reports for one body at one level.
std::vector<InequalityReport> scan_reports(const ChartBody& body, const ScanConfig& config, int level);

ScanRecord scan_one(const ScanConfig& config, std::size_t index);

// Evaluates `count` bodies; `sink` receives records in index order.
void scan_conjectures(const ScanConfig& config, const std::function<void(const ScanRecord&)>& sink);
std::vector<ScanRecord> scan_conjectures(const ScanConfig& config);

}  // namespace sfa
