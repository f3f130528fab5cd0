// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hgc/datum.hpp"
#include "hgc/padic.hpp"

namespace hgc {

// nu(a, x) = -floor((x - a)/(p - 1)).
int nu(long a, const Rational& x, u64 p);

// e(k) at k in [0, p-2].
int e_function(const HypergeometricDatum& d, u64 p, long k);
// e at a normalized point x = k/(p-1) in [0, 1).
int e_at(const HypergeometricDatum& d, const Rational& x);

struct Segment {
  Rational start, end;  // start == end for an isolated point
  bool closed_left = true, closed_right = true;
  int e = 0;
};

struct Interval {
  Rational lo, hi;
};

// The p-free step function on [0, 1) with its bottom data.
struct Profile {
  std::vector<Rational> breakpoints;
  std::vector<Segment> segments;  // maximal constant pieces, left to right
  int s = 0;
  int w = 0;
  std::vector<Interval> bottom;  // closures of the pieces where e == s
  bool connected = false;
  bool has_shift = false;  // hat_alpha/breve_beta filled when connected
  Multiset hat_alpha, breve_beta;
};

Profile profile(const HypergeometricDatum& d);

// The same data at an explicit prime, indexed by k = 0..p-2.
struct PrimeProfile {
  u64 p = 0;
  std::vector<int> e;
  int s = 0;
  int w = 0;
  std::vector<std::pair<long, long>> bottom;  // inclusive k ranges
  bool connected = false;
  long t = 0;
};

PrimeProfile profile_at(const HypergeometricDatum& d, u64 p);

// (hat alpha, breve beta) for any k in the bottom interval at p; throws
// NotApplicable when the bottom interval is disconnected.
std::pair<Multiset, Multiset> hat_breve(const HypergeometricDatum& d, u64 p);
std::pair<Multiset, Multiset> hat_breve_at(const HypergeometricDatum& d, u64 p, long k);

// t = sum a0(b_i).
long t_sum(const Multiset& beta, u64 p);

std::string profile_csv(const Profile& pr);
std::string profile_svg(const Profile& pr);
enum class PlotFormat { csv, svg };
void export_profile_plot(const Profile& pr, PlotFormat format, const std::string& path);

}  // namespace hgc
