#include "vrkit_cli/commands.hpp"

int main(int argc, char** argv) { return vrkit::cli::run_cli(argc, argv); }
