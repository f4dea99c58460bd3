#include "cli/commands.hpp"

int main(int argc, char** argv) { return entrap::cli::run(argc, argv); }
