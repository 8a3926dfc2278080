#include "cli.hpp"

int main(int argc, char** argv) { return ionraman::cli::run(argc, argv); }
