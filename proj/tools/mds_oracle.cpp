#include <iostream>

#include "mds/cli.hpp"

int main(int argc, char** argv) { return mds::run(argc, argv, std::cout, std::cerr); }
