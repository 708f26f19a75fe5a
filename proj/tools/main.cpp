#include "stratavol/cli.hpp"

int main(int argc, char** argv) { return stratavol::cli::run_cli(argc, argv); }
