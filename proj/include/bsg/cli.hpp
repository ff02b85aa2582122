#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsg::cli {

/// Exit codes: 0 success / all checks pass, 1 a verification failed,
/// 2 usage or input error (one-line diagnostic on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace bsg::cli
