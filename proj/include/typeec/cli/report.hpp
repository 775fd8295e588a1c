#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace typeec::cli {

/// erratum: the computation is consistent but a printed reference value
/// disagrees with it.
enum class Status { pass, fail, erratum };

const char* to_string(Status s);

struct Check {
  std::string name;
  Status status;
  std::string details;
};

class Report {
 public:
  void add(std::string name, Status status, std::string details = {});
  /// pass when `ok`, fail otherwise.
  void expect(std::string name, bool ok, std::string details = {});

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t count(Status s) const;
  /// 0 when nothing failed; errata count as failures under `strict`.
  int exit_code(bool strict) const;

  std::string text() const;
  nlohmann::json json() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace typeec::cli
