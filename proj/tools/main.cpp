#include "xline/cli.hpp"

int main(int argc, char** argv) { return xline::run_cli(argc, argv); }
