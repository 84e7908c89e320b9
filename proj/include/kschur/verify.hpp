#pragma once

#include <string>
#include <vector>

namespace kschur {

struct SuiteReport {
  std::string suite;
  int k = 0;
  int max_degree = 0;
  long checks = 0;
  long failures = 0;
  // One diagnostic line per failed check (capped).
  std::vector<std::string> messages;

  void note(bool ok, const std::string& message);
  void merge(const SuiteReport& other);
  bool passed() const { return failures == 0; }
};

// Suites: bijection (core/partition maps, corner structure, ribbon
// covers), pieri (subset vs strip products), strips (vertical strip
// enumeration), recursion (operator products give unit vectors),
// oracle (tableau counts against the signed expansion), involution
// (pairing of the cancellation domain), or all.
std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& suite, int k, int max_degree,
                      int jobs = 1);

}  // namespace kschur
