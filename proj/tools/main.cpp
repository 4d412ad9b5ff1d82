#include "hullprice/cli/commands.hpp"

int main(int argc, char** argv) { return hullprice::cli::run(argc, argv); }
