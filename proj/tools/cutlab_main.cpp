#include "cutlab/cli.hpp"

int main(int argc, char** argv) { return cutlab::run_cli(argc, argv); }
