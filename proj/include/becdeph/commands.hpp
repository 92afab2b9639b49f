// commands.hpp — entry point for the command-line interface
#pragma once

namespace becdeph {

// Parses argv and runs the selected subcommand. Returns 0 on success, 2 for
// usage or parameter errors, 3 for numerical failures.
int run_cli(int argc, char** argv);

}  // namespace becdeph
