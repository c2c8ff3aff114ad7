#include "tmpart/cli.hpp"

int main(int argc, char** argv) { return tmpart::cli::run(argc, argv); }
