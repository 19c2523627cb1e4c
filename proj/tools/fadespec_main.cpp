#include "fadespec/cli/run.hpp"

int main(int argc, char** argv) { return fadespec::cli::run(argc, argv); }
