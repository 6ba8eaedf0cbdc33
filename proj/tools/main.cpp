// main.cpp - hardysn command line entry point
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <iostream>

#include "hardysn/cli_commands.hpp"

int main(int argc, char** argv) {
    return hardysn::cli::run_cli(argc, argv, std::cout);
}
