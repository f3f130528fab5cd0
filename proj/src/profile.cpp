// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/profile.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "hgc/errors.hpp"

namespace hgc {

// The case split 0 if a <= x, 1 if x < a < p. The floor expression
// -floor((x-a)/(p-1)) agrees except at a = 0, x = p-1.
int nu(long a, const Rational& x, u64 p) {
  if (a < 0 || a >= static_cast<long>(p)) throw Error("nu needs 0 <= a < p");
  return Rational(a) <= x ? 0 : 1;
}

int e_at(const HypergeometricDatum& d, const Rational& x) {
  long e = 0;
  for (std::size_t i = 0; i < d.n(); ++i) {
    e -= floor(d.alpha[i] - x).get_si();
    e -= floor(x + frac(d.beta[i])).get_si();
  }
  return static_cast<int>(e);
}

int e_function(const HypergeometricDatum& d, u64 p, long k) {
  return e_at(d, ratio(k, static_cast<long>(p) - 1));
}

Profile profile(const HypergeometricDatum& d) {
  Profile pr;
  std::set<Rational> pts{Rational(0)};
  for (const auto& a : d.alpha) pts.insert(frac(a));
  for (const auto& b : d.beta) {
    Rational x = 1 - frac(b);
    if (x > 0 && x < 1) pts.insert(x);
  }
  pr.breakpoints.assign(pts.begin(), pts.end());

  // Alternate isolated points and the open gaps after them.
  std::vector<Segment> pieces;
  for (std::size_t i = 0; i < pr.breakpoints.size(); ++i) {
    const Rational& x = pr.breakpoints[i];
    Rational next = i + 1 < pr.breakpoints.size() ? pr.breakpoints[i + 1] : Rational(1);
    pieces.push_back({x, x, true, true, e_at(d, x)});
    pieces.push_back({x, next, false, false, e_at(d, (x + next) / 2)});
  }
  for (const auto& piece : pieces) {
    if (!pr.segments.empty() && pr.segments.back().e == piece.e) {
      pr.segments.back().end = piece.end;
      pr.segments.back().closed_right = piece.closed_right;
    } else {
      pr.segments.push_back(piece);
    }
  }
  int lo = pr.segments.front().e, hi = lo;
  for (const auto& seg : pr.segments) {
    lo = std::min(lo, seg.e);
    hi = std::max(hi, seg.e);
  }
  pr.s = lo;
  pr.w = hi - lo;
  for (const auto& seg : pr.segments)
    if (seg.e == pr.s) pr.bottom.push_back({seg.start, seg.end});
  pr.connected = pr.bottom.size() == 1;

  if (pr.connected) {
    // Evaluate the shifts at the two ends and the middle of the bottom piece;
    // they must agree.
    const Segment* bottom = nullptr;
    for (const auto& seg : pr.segments)
      if (seg.e == pr.s) bottom = &seg;
    std::vector<Rational> probes{(bottom->start + bottom->end) / 2};
    if (bottom->closed_left) probes.push_back(bottom->start);
    if (bottom->closed_right) probes.push_back(bottom->end);
    for (std::size_t j = 0; j < probes.size(); ++j) {
      const Rational& x = probes[j];
      std::vector<Rational> ha, bb;
      for (const auto& a : d.alpha) ha.push_back(a + (a < x ? 1 : 0));
      for (const auto& b : d.beta) bb.push_back(b + floor(x + frac(1 - b)));
      Multiset mh = make_multiset(ha), mb = make_multiset(bb);
      if (j == 0) {
        pr.hat_alpha = mh;
        pr.breve_beta = mb;
      } else if (mh != pr.hat_alpha || mb != pr.breve_beta) {
        throw ConsistencyError("parameter shifts vary across the bottom interval");
      }
    }
    pr.has_shift = true;
  }
  return pr;
}

PrimeProfile profile_at(const HypergeometricDatum& d, u64 p) {
  if (prime_divides_level(d, p)) throw InvalidPrime("p divides the level of the datum");
  PrimeProfile pr;
  pr.p = p;
  for (long k = 0; k + 1 < static_cast<long>(p); ++k) pr.e.push_back(e_function(d, p, k));
  auto [lo, hi] = std::minmax_element(pr.e.begin(), pr.e.end());
  pr.s = *lo;
  pr.w = *hi - *lo;
  for (long k = 0; k < static_cast<long>(pr.e.size()); ++k) {
    if (pr.e[k] != pr.s) continue;
    if (!pr.bottom.empty() && pr.bottom.back().second == k - 1)
      pr.bottom.back().second = k;
    else
      pr.bottom.push_back({k, k});
  }
  pr.connected = pr.bottom.size() == 1;
  pr.t = t_sum(d.beta, p);
  return pr;
}

std::pair<Multiset, Multiset> hat_breve_at(const HypergeometricDatum& d, u64 p, long k) {
  const Rational x = ratio(k, static_cast<long>(p) - 1);
  std::vector<Rational> ha, bb;
  for (const auto& a : d.alpha) {
    Rational scaled = a * Rational(static_cast<long>(p) - 1);
    ha.push_back(a + nu(k, scaled, p));
  }
  for (const auto& b : d.beta) bb.push_back(b + floor(x + frac(1 - b)));
  return {make_multiset(ha), make_multiset(bb)};
}

std::pair<Multiset, Multiset> hat_breve(const HypergeometricDatum& d, u64 p) {
  PrimeProfile pr = profile_at(d, p);
  if (!pr.connected) {
    std::ostringstream os;
    os << "bottom interval at p=" << p << " is disconnected:";
    for (auto [a, b] : pr.bottom) os << " [" << a << "," << b << "]";
    throw NotApplicable(os.str());
  }
  auto [lo, hi] = pr.bottom.front();
  auto first = hat_breve_at(d, p, lo);
  for (long k = lo + 1; k <= hi; ++k)
    if (hat_breve_at(d, p, k) != first) throw ConsistencyError("parameter shifts depend on k");
  return first;
}

long t_sum(const Multiset& beta, u64 p) {
  long t = 0;
  for (const auto& b : beta) t += a0(b, p);
  return t;
}

namespace {

std::string dec(const Rational& x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x.get_d());
  return buf;
}

}  // namespace

std::string profile_csv(const Profile& pr) {
  std::ostringstream os;
  os << "x_start,x_end,e\n";
  for (const auto& seg : pr.segments) os << dec(seg.start) << "," << dec(seg.end) << "," << seg.e << "\n";
  return os.str();
}

std::string profile_svg(const Profile& pr) {
  const double width = 400, height = 200, pad = 20;
  int lo = pr.s, hi = pr.s + pr.w;
  double span = hi > lo ? hi - lo : 1;
  auto X = [&](const Rational& x) { return pad + x.get_d() * (width - 2 * pad); };
  auto Y = [&](int e) { return height - pad - (e - lo) / span * (height - 2 * pad); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<polyline fill=\"none\" stroke=\"black\" points=\"";
  bool first = true;
  for (const auto& seg : pr.segments) {
    if (!first) os << " ";
    os << X(seg.start) << "," << Y(seg.e) << " " << X(seg.end) << "," << Y(seg.e);
    first = false;
  }
  os << " " << X(1) << "," << Y(pr.segments.back().e) << "\"/>\n";
  os << "<text x=\"2\" y=\"" << Y(lo) << "\" font-size=\"10\">" << lo << "</text>\n";
  os << "<text x=\"2\" y=\"" << Y(hi) << "\" font-size=\"10\">" << hi << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

void export_profile_plot(const Profile& pr, PlotFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << (format == PlotFormat::csv ? profile_csv(pr) : profile_svg(pr));
  if (!out) throw Error("write failed for " + path);
}

}  // namespace hgc
