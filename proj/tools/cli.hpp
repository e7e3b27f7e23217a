#pragma once

#include <string>
#include <vector>

namespace hypercover_cli {

// full command-line entry; returns the process exit status
int run(int argc, const char* const* argv);

// convenience for in-process driving (args exclude the program name)
int run(const std::vector<std::string>& args);

}  // namespace hypercover_cli
