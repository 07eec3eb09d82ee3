#include "cli.hpp"

int main(int argc, char** argv) { return intrans::run_cli(argc, argv); }
