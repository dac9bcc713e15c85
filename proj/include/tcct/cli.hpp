// Command-line front end. run_cli parses arguments, dispatches to the
// pipelines and scenario runners, and maps failures to exit codes:
// 0 success, 2 usage or configuration error, 3 data error.
#pragma once

namespace tcct {

int run_cli(int argc, const char* const* argv);

}  // namespace tcct
