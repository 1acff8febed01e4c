#include "hhineq/cli.hpp"

int main(int argc, char** argv) { return hhineq::cli_main(argc, argv); }
