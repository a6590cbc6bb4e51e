#include "qbrauer/cli.hpp"

int main(int argc, char** argv) { return qbrauer::run_cli(argc, argv); }
