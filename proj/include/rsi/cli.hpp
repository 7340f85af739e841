#pragma once

namespace rsi {

/// Entry point of the `verify` tool. Returns 0 when every non-skipped check
/// passes, 1 on a failure and 2 on a configuration error.
int run_cli(int argc, char** argv);

}  // namespace rsi
