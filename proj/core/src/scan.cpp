#include "sfa/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "sfa/inequalities.hpp"

namespace sfa {

namespace {

constexpr std::array<const char*, 4> kTargets = {"floating_area", "entropy", "strong_bound", "euclidean"};

bool has(const ScanConfig& c, ScanTarget t) { return std::find(c.targets.begin(), c.targets.end(), t) != c.targets.end(); }

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

void minimal(const std::vector<InequalityReport>& reports, double& margin, std::string& name) {
  margin = std::numeric_limits<double>::infinity();
  name.clear();
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Skipped) continue;
    const double m = r.relative_margin();
    if (m < margin) {
      margin = m;
      name = r.name;
    }
  }
}

}  // namespace

const char* target_name(ScanTarget t) { return kTargets[static_cast<std::size_t>(t)]; }

ScanTarget parse_target(const std::string& name) {
  for (std::size_t i = 0; i < kTargets.size(); ++i)
    if (name == kTargets[i]) return static_cast<ScanTarget>(i);
  throw GeometryError(ErrorKind::Parse, "unknown scan target: " + name);
}

int doubled_level(const FamilySpec& family, int level) {
  const bool circle = family.d == 2;
  return circle ? level + 1 : 2 * level;
}

std::vector<InequalityReport> scan_reports(const ChartBody& body, const ScanConfig& config, int level) {
  std::vector<InequalityReport> out;
  const bool floating = has(config, ScanTarget::FloatingArea);
  const bool entropy = has(config, ScanTarget::Entropy);
  const bool strong = has(config, ScanTarget::StrongBound);
  if (floating || entropy || strong) {
    SuiteOptions o;
    o.level = level;
    o.p_grid = config.p_values;
    o.compute_center = floating;
    const SphericalSummary s = summarize(body, o);
    for (auto& r : conjecture_reports(s, config.p_values)) {
      const bool keep = (floating && starts_with(r.name, "conjecture floating area")) ||
                        (entropy && starts_with(r.name, "conjecture entropy")) ||
                        (strong && starts_with(r.name, "conjecture strong bound"));
      if (keep) out.push_back(std::move(r));
    }
  }
  if (has(config, ScanTarget::Euclidean)) {
    const ChartBody flat = body.lambda() == 0.0 ? body : body.with_lambda(0.0);
    for (auto& r : euclidean_conjecture_reports(flat, level)) out.push_back(std::move(r));
  }
  return out;
}

ScanRecord scan_one(const ScanConfig& config, std::size_t index) {
  ScanRecord rec;
  rec.index = index;
  rec.seed = derive_seed(config.family.seed, index);
  try {
    const ChartBody body = generate(config.family, index);
    rec.body = std::string(family_name(config.family.kind)) + ": " + describe(body);
    rec.reports = scan_reports(body, config, config.level);
    minimal(rec.reports, rec.min_margin, rec.min_name);
    bool regime = false;
    bool violated = false;
    for (const auto& r : rec.reports) {
      const auto it = r.flags.find("info:theorem_regime");
      regime = regime || (it != r.flags.end() && it->second);
      violated = violated || r.verdict == Verdict::Violated;
    }
    rec.flags["theorem_regime"] = regime;
    rec.flags["violated"] = violated;
    if (violated) {
      const std::vector<InequalityReport> fine = scan_reports(body, config, doubled_level(config.family, config.level));
      std::string name;
      minimal(fine, rec.reverified_margin, name);
      rec.reverified = true;
      for (const auto& r : rec.reports) {
        if (r.verdict != Verdict::Violated) continue;
        for (const auto& f : fine)
          if (f.name == r.name && f.verdict == Verdict::Violated) rec.persistent_violations.push_back(r.name);
      }
    }
    rec.flags["persistent_violation"] = !rec.persistent_violations.empty();
  } catch (const GeometryError& e) {
    rec.error = e.what();
    rec.min_margin = std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

void scan_conjectures(const ScanConfig& config, const std::function<void(const ScanRecord&)>& sink) {
  const std::size_t n = config.count;
  const int workers = std::max(1, std::min<int>(config.threads, static_cast<int>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) sink(scan_one(config, i));
    return;
  }
  std::vector<std::optional<ScanRecord>> done(n);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t emitted = 0;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      ScanRecord rec = scan_one(config, i);
      std::lock_guard<std::mutex> lock(mu);
      done[i] = std::move(rec);
      while (emitted < n && done[emitted]) {
        sink(*done[emitted]);
        done[emitted].reset();
        ++emitted;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

std::vector<ScanRecord> scan_conjectures(const ScanConfig& config) {
  std::vector<ScanRecord> out;
  out.reserve(config.count);
  scan_conjectures(config, [&](const ScanRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace sfa
