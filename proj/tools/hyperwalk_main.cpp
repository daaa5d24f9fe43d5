#include "hyperwalk/cli.hpp"

int main(int argc, char** argv) { return hyperwalk::cli::main_entry(argc, argv); }
