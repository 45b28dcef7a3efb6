#include "rlc/cli.hpp"

int main(int argc, char** argv) { return rlc::cli_main(argc, argv); }
