#include "cranklab/cli_report.hpp"

int main(int argc, char** argv) { return cranklab::run_cli(argc, argv); }
