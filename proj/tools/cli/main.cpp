#include "cli.hpp"

int main(int argc, char** argv) { return renvol::cli::run_command(argc, argv); }
