#include "overchev/cli.hpp"

int main(int argc, char** argv) { return overchev::cli::run_main(argc, argv); }
