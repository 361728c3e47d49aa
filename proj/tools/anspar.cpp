#include "anspar/cli.hpp"

int main(int argc, char** argv) { return anspar::cli::run_command(argc, argv); }
