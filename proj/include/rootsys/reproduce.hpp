#pragma once

#include <string>
#include <vector>

namespace rootsys {

struct Check {
    int criterion = 0;
    std::string anchor;
    std::string expected;
    std::string computed;
    bool pass = false;
};

// Scopes: classical, exceptional, fund, out, affine, all.
struct ReproduceOptions {
    std::string scope = "all";
    int jobs = 1;
};

const std::vector<std::string>& reproduce_scopes();

// Runs the acceptance matrix of the scope.  The report order depends only on
// the scope, never on the number of worker threads.
std::vector<Check> reproduce(const ReproduceOptions& opt);

std::string format_report_text(const std::vector<Check>& checks);
std::string format_report_json(const std::vector<Check>& checks);

}  // namespace rootsys
