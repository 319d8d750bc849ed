#pragma once

#include <string>
#include <vector>

namespace contamkit {

// Entry point behind the contamkit binary. `args` excludes the program
// name. Exit codes: 0 success, 1 usage error, 2 data error, 3 provider
// error. Every file-producing run also writes a provenance sidecar naming
// the inputs (with content hashes), outputs, and seeds.
int run_command(const std::vector<std::string>& args);

}  // namespace contamkit
