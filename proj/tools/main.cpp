#include "cli.hpp"

int main(int argc, char** argv) { return hypercover_cli::run(argc, argv); }
