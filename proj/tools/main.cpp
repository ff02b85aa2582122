#include "bsg/cli.hpp"

int main(int argc, char** argv) { return bsg::cli::run(argc, argv); }
