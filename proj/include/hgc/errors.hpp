// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hgc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// p divides a denominator, p even where odd is required, and similar.
class InvalidPrime : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

// A hypothesis of the requested construction fails (disconnected bottom
// interval, no degenerate root, non-ordinary prime).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

// The requested p-adic or floating point precision cannot be certified.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Results that should be integral or self-consistent are not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MissingFixture : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

}  // namespace hgc
