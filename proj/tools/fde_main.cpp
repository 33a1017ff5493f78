#include "fde/cli.hpp"

int main(int argc, char** argv) { return fde::cli::main_entry(argc, argv); }
