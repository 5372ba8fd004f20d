#ifndef JETGAL_TOOLS_JOBFILE_HPP
#define JETGAL_TOOLS_JOBFILE_HPP

#include <string>
#include <vector>

namespace jetgal::cli {

struct TaskResult {
  std::string label;
  std::string outcome;  // "pass" or "fail"
  std::string expected; // "pass" or "fail"
  std::string detail;   // residue or mismatch description
  bool ok() const { return outcome == expected; }
};

struct JobReport {
  std::vector<TaskResult> tasks;
  bool ok() const {
    for (const auto& t : tasks)
      if (!t.ok()) return false;
    return true;
  }
};

// Runs a structured job file (strict schema, unknown keys rejected).
JobReport run_job_file(const std::string& path);

std::string render_job_text(const JobReport& report);
std::string render_job_json(const JobReport& report);

} // namespace jetgal::cli

#endif
