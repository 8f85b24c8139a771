#include "qvolk/cli.hpp"

int main(int argc, char** argv) { return qvolk::cli::run_cli(argc, argv); }
