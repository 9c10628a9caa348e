#include "hyparr/cli.hpp"

int main(int argc, char** argv) { return hyparr::main_cli(argc, argv); }
