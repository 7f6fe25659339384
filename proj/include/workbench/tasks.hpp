#pragma once

#include <string>
#include <vector>

#include "workbench/problem.hpp"

namespace workbench {

/// Finished computation: a deterministic text report plus the process exit
/// status it implies (0 ok, 2 invalid input or failed certificate, 3 broken
/// internal invariant).
struct TaskResult {
  std::string name;
  std::string report;
  int status = 0;
};

/// Runs one task against the problem's state source or fock section.
TaskResult run_task(const Problem &p, const TaskRequest &req);

/// Runs every task listed in the problem; repeated kinds get _2, _3, ...
/// suffixes on the result name.
std::vector<TaskResult> run_all(const Problem &p);

} // namespace workbench
