#include "hitchinlab/cli.hpp"

int main(int argc, char** argv) { return hitchinlab::cli::dispatch(argc, argv); }
