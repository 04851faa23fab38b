#include "locolor/cli.hpp"

int main(int argc, char** argv) { return locolor::cli_dispatch(argc, argv); }
