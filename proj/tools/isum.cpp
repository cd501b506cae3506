#include "isum/cli.hpp"

int main(int argc, char** argv) { return isum::cli::run(argc, argv); }
