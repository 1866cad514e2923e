#include "varigame/cli.hpp"

int main(int argc, char** argv) { return varigame::cli::run(argc, argv); }
