#include "weylkit/cli.hpp"

int main(int argc, char** argv) { return weylkit::cli::run(argc, argv); }
