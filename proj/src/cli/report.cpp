#include "typeec/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace typeec::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::erratum: return "erratum";
  }
  return "?";
}

void Report::add(std::string name, Status status, std::string details) {
  checks_.push_back({std::move(name), status, std::move(details)});
}

void Report::expect(std::string name, bool ok, std::string details) {
  add(std::move(name), ok ? Status::pass : Status::fail, std::move(details));
}

std::size_t Report::count(Status s) const {
  return std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; });
}

int Report::exit_code(bool strict) const {
  if (count(Status::fail) > 0) return 1;
  if (strict && count(Status::erratum) > 0) return 1;
  return 0;
}

std::string Report::text() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << '[' << to_string(c.status) << "] " << c.name;
    if (!c.details.empty()) out << ": " << c.details;
    out << '\n';
  }
  out << count(Status::pass) << " passed, " << count(Status::fail) << " failed, " << count(Status::erratum)
      << " errata\n";
  return out.str();
}

nlohmann::json Report::json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  return {{"checks", checks},
          {"summary",
           {{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"erratum", count(Status::erratum)}}}};
}

}  // namespace typeec::cli
