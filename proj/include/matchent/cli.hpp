#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matchent {

/// Runs the command-line tool; `args` excludes the program name.
/// Returns 0 on success, 1 if a verification failed, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ReportResult {
  std::string json;
  std::string csv;
  int certificates = 0;
  int failed = 0;
  int warnings = 0;
};

/// Runs a verification suite (schrijver, lmc, direct, biregular, energy,
/// integral, lifts, all) over edge-list files. Unreadable or unsuitable
/// graphs become warnings.
ReportResult report(const std::vector<std::string>& paths, const std::string& suite);

}  // namespace matchent
