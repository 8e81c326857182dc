#pragma once

namespace kirch {

// full command-line front end; returns the process exit code
// (0 success, 1 verification/reproduction failure, 2 usage or input error)
int cli_main(int argc, char** argv);

} // namespace kirch
