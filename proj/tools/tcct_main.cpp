// Entry point for the tcct command-line tool.
#include "tcct/cli.hpp"

int main(int argc, char** argv) { return tcct::run_cli(argc, argv); }
