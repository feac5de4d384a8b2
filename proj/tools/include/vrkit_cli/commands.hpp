#pragma once

namespace vrkit::cli {

// full command-line surface; returns the process exit code:
//   0 success, 1 verification failure, 2 bad input, 3 degenerate domain,
//   4 numerical failure
int run_cli(int argc, char** argv);

}  // namespace vrkit::cli
