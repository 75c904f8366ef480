#include "g2chev/cli.hpp"

int main(int argc, char** argv) { return g2chev::cli::main_from_args(argc, argv); }
