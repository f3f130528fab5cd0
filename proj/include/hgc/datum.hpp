// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgc/rational.hpp"

namespace hgc {

// Sorted list of reduced fractions; repeats allowed.
using Multiset = std::vector<Rational>;

Multiset make_multiset(std::vector<Rational> values);

struct HypergeometricDatum {
  Multiset alpha;
  Multiset beta;
  Rational lambda;

  std::size_t n() const { return alpha.size(); }
  bool operator==(const HypergeometricDatum& other) const = default;
};

// Entries are stored as given unless normalize is set, which moves alpha into
// [0,1) and beta into (0,1].
HypergeometricDatum make_datum(std::vector<Rational> alpha, std::vector<Rational> beta,
                               Rational lambda, bool normalize = false);

// "alpha=1/2,1/2,1/3,2/3; beta=1,1,7/6,5/6; lambda=1" or an alias H1..H8.
HypergeometricDatum parse_datum(std::string_view text);
std::optional<HypergeometricDatum> datum_alias(std::string_view name);
std::string format_datum(const HypergeometricDatum& d);
std::string format_multiset(const Multiset& s);

Integer lcm_denominator(const Multiset& s);
Integer lcm_denominator(const HypergeometricDatum& d);

bool is_defined_over_Q(const Multiset& s);
bool satisfies_diamond(const HypergeometricDatum& d);

Multiset dash_image(const Multiset& s, std::uint64_t p);

// Primes dividing some denominator of d.
bool prime_divides_level(const HypergeometricDatum& d, std::uint64_t p);

}  // namespace hgc
