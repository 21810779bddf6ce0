#include "commands.hpp"

int main(int argc, char** argv) { return vsaogm::cli::run_cli(argc, argv); }
