#pragma once

#include <string>
#include <vector>

namespace mobi {

enum class Verdict { pass, fail };

const char* to_string(Verdict v);

struct Violation {
  std::string inputs;  // JSON object text, inputs by name
  std::string lhs;     // JSON text
  std::string rhs;     // JSON text
  double distance = 0.0;
  std::string note;  // closure failures, evaluation errors, broken premises
};

// Outcome of one law over one batch of samples.
struct LawReport {
  std::string law;
  std::size_t samples = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first max_witnesses, in sample order

  Verdict verdict() const { return violation_count == 0 ? Verdict::pass : Verdict::fail; }
  bool passed() const { return violation_count == 0; }
};

// {"law","samples","verdict","violation_count","violations":[{"inputs","lhs","rhs","distance"}]}
std::string to_json(const LawReport& report);

// Combine reports of several equations into one law.
LawReport merge_reports(std::string law, const std::vector<LawReport>& parts, std::size_t max_witnesses);

const LawReport* find_report(const std::vector<LawReport>& reports, const std::string& law);

}  // namespace mobi
