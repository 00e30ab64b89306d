#include "superspace/cli.hpp"

int main(int argc, char** argv) { return superspace::cli::run(argc, argv); }
