#include "edgenet/cli.hpp"

int main(int argc, char** argv) { return edgenet::cli_dispatch(argc, argv); }
