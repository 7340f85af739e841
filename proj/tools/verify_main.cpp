#include "rsi/cli.hpp"

int main(int argc, char** argv) { return rsi::run_cli(argc, argv); }
