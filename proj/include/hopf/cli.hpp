#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf::cli {

// Exit codes: 0 all requested checks pass; 1 a validation failed;
// 2 usage/input error; 3 search or window bound exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hopf::cli
