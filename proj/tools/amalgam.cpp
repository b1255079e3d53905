// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "amalgam/cli.hpp"

int main(int argc, char** argv)
{
    return amalgam::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
