#include "lb/cli.hpp"

int main(int argc, char** argv) { return lb::run(argc, argv); }
