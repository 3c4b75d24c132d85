#include "cli.hpp"

int main(int argc, char** argv) { return hnls::cli::run_cli(argc, argv); }
