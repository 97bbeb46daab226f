#pragma once

namespace weylinv {

// Entry point of the command line tool.  Exit codes: 0 success, 1 claim
// failure, 2 usage error, 3 budget exceeded.
int run(int argc, char** argv);

}  // namespace weylinv
