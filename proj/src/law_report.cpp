#include "mobi/law_report.hpp"

#include <algorithm>
#include <cstdio>

#include "mobi/values.hpp"

namespace mobi {

const char* to_string(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

namespace {

void append_string(std::string& out, const std::string& s) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

}  // namespace

std::string to_json(const LawReport& report) {
  std::string out = "{\"law\":";
  append_string(out, report.law);
  out += ",\"samples\":" + std::to_string(report.samples);
  out += ",\"verdict\":\"";
  out += to_string(report.verdict());
  out += "\",\"violation_count\":" + std::to_string(report.violation_count);
  out += ",\"violations\":[";
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const auto& v = report.violations[i];
    if (i != 0) out.push_back(',');
    out += "{\"inputs\":" + v.inputs + ",\"lhs\":" + v.lhs + ",\"rhs\":" + v.rhs +
           ",\"distance\":" + format_double(v.distance);
    if (!v.note.empty()) {
      out += ",\"note\":";
      append_string(out, v.note);
    }
    out.push_back('}');
  }
  out += "]}";
  return out;
}

LawReport merge_reports(std::string law, const std::vector<LawReport>& parts, std::size_t max_witnesses) {
  LawReport merged;
  merged.law = std::move(law);
  for (const auto& part : parts) {
    merged.samples += part.samples;
    merged.violation_count += part.violation_count;
    for (const auto& v : part.violations) {
      if (merged.violations.size() < std::max<std::size_t>(1, max_witnesses)) merged.violations.push_back(v);
    }
  }
  return merged;
}

const LawReport* find_report(const std::vector<LawReport>& reports, const std::string& law) {
  for (const auto& r : reports)
    if (r.law == law) return &r;
  return nullptr;
}

}  // namespace mobi
