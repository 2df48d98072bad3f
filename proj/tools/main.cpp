#include "cli.hpp"

int main(int argc, char** argv) { return krein::cli::main_entry(argc, argv); }
