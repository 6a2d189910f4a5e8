#include "glres/cli.hpp"

int main(int argc, char** argv) { return glres::run_cli(argc, argv); }
