#include "eigenroot/cli.hpp"

int main(int argc, char** argv) { return eigenroot::cli_run(argc, argv); }
