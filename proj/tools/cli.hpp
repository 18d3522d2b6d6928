#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "suites.hpp"

namespace minusone::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

int cmd_table(const SuiteConfig& cfg, std::ostream& out);
int cmd_verify(const std::string& suite, const SuiteConfig& cfg, std::ostream& out);
int cmd_sample(const std::string& target, const SuiteConfig& cfg, std::ostream& out);

/// Full command line (args[0] is the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minusone::cli
