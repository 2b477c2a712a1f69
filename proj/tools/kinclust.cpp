#include "kinclust/cli.hpp"

int main(int argc, char** argv) { return kinclust::cli::cli_main(argc, argv); }
