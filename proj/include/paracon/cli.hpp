#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "paracon/contradiction.hpp"
#include "paracon/hierarchy.hpp"
#include "paracon/rational.hpp"
#include "paracon/report.hpp"

namespace paracon {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

struct RunConfig {
    Rational theta{2, 5};
    ClusterMode mode = ClusterMode::ConnectedComponents;
    RepairPolicy repair_policy = RepairPolicy::DropNegative;
    OutputFormat output_format = OutputFormat::Human;
    int decimal_precision = 2;
};

// argv-style: args[0] is the program name. Returns the exit status; all
// output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paracon
