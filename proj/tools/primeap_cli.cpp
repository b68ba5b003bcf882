#include "primeap/cli.hpp"

int main(int argc, char** argv) { return primeap::cli::run(argc, argv); }
