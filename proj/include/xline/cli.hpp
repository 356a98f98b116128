#ifndef XLINE_CLI_HPP
#define XLINE_CLI_HPP

#include <string>

#include "xline/classify.hpp"

namespace xline {

// Stable JSON rendering of a classification report (schema 1).
std::string report_json(const ClassificationReport& report);

// Full command dispatch; returns the process exit code.
// 0 success / consistent, 1 usage or data error, 2 inconsistent or
// disagreeing results, 3 bound exceeded, 4 nonexistence certified.
int run_cli(int argc, const char* const* argv);

}  // namespace xline

#endif  // XLINE_CLI_HPP
