// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/cli.hpp"

int main(int argc, char** argv) { return hgc::cli::run(argc, argv); }
