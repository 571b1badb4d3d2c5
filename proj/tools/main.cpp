#include "cli.hpp"

int main(int argc, char** argv) { return fracosc::cli::run(argc, argv); }
