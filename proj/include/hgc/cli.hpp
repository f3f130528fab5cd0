// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hgc/padic.hpp"

namespace hgc::cli {

enum ExitCode { ok = 0, failure = 1, inconclusive = 2, usage = 3 };

// "7..31", "7,11,13" or "17"; only primes are kept.
std::vector<u64> parse_primes(const std::string& text);

// args excludes the program name. Machine output goes to out (or --out),
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hgc::cli
