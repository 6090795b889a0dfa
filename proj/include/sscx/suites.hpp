#ifndef SSCX_SUITES_HPP
#define SSCX_SUITES_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sscx/report.hpp"

namespace sscx {

/// One unit of work. suite and params are known up front so a task that
/// throws can still be reported in its sorted place.
struct Task {
    std::string suite;
    IntFields params;
    std::function<Report()> run;
};

struct FiberSuiteOptions {
    int n = 3;
    std::optional<int> t; // all of 0..2n-2 when empty
    std::vector<std::string> checks;  // all when empty
};

struct WeightSuiteOptions {
    int n = 3;
    int k = 2;
    std::optional<int> t; // euler only; all of 0..2n-k when empty
    std::vector<std::string> checks;
};

const std::vector<std::string>& fiber_check_names();
const std::vector<std::string>& weight_check_names();

/// Throw UsageError on an out-of-band parameter or unknown check.
std::vector<Task> fiber_tasks(const FiberSuiteOptions& opt);
std::vector<Task> weight_tasks(const WeightSuiteOptions& opt);

struct TaskOutcome {
    Report report;
    std::string error; // set when the task threw; the report then fails
};

/// Runs tasks on `jobs` threads and returns the outcomes sorted by
/// (suite, params). elapsed_ms stays 0 unless timing is requested.
std::vector<TaskOutcome> run_tasks(const std::vector<Task>& tasks, int jobs, bool timing);

/// Command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sscx

#endif
