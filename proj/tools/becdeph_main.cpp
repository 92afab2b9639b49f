// becdeph_main.cpp — executable wrapper around the CLI
#include "becdeph/commands.hpp"

int main(int argc, char** argv) { return becdeph::run_cli(argc, argv); }
