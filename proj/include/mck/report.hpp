#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace mck {

enum class CheckStatus { Pass, Fail, Inconclusive };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

// One verified identity or property. `detail` carries the failure context (or
// a short note for inconclusive results) and stays empty on success.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  long elapsed_ms = 0;
};

using Report = std::vector<CheckResult>;

// Times one identity check. The body returns the failure detail, or an empty
// string on success; exceptions become failures with the message as detail.
inline CheckResult run_check(const std::string& id,
                             const std::function<std::string()>& body) {
  CheckResult r;
  r.id = id;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.status = r.detail.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  } catch (const std::exception& ex) {
    r.status = CheckStatus::Fail;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

inline bool report_passed(const Report& r) {
  for (const auto& c : r)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

inline bool report_inconclusive(const Report& r) {
  for (const auto& c : r)
    if (c.status == CheckStatus::Inconclusive) return true;
  return false;
}

}  // namespace mck
