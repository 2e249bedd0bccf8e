#include "narrative/cli.hpp"

int main(int argc, char** argv) { return narrative::run_cli(argc, argv); }
