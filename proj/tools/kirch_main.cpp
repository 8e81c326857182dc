#include "kirch/cli.hpp"

int main(int argc, char** argv) { return kirch::cli_main(argc, argv); }
