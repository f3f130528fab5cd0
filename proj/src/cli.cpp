// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hgc/charsum.hpp"
#include "hgc/datum.hpp"
#include "hgc/errors.hpp"
#include "hgc/euler.hpp"
#include "hgc/modforms.hpp"
#include "hgc/profile.hpp"
#include "hgc/series.hpp"
#include "hgc/verify.hpp"

namespace hgc::cli {

namespace {

using ojson = nlohmann::ordered_json;

u64 parse_u64(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError("not a nonnegative integer: '" + s + "'");
  return v;
}

ojson rationals(const std::vector<Rational>& xs) {
  ojson a = ojson::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

struct Output {
  std::ostream& out;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw ParseError("short write to " + path);
  }
};

int verdict_exit(const std::vector<CongruenceCheck>& checks) {
  bool inconc = false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fails) return failure;
    if (c.verdict == Verdict::inconclusive) inconc = true;
  }
  return inconc ? inconclusive : ok;
}

ojson profile_json(const Profile& pr) {
  ojson j;
  j["s"] = pr.s;
  j["w"] = pr.w;
  j["breakpoints"] = rationals(pr.breakpoints);
  ojson segs = ojson::array();
  for (const auto& s : pr.segments) {
    ojson e;
    e["start"] = to_string(s.start);
    e["end"] = to_string(s.end);
    e["closed_left"] = s.closed_left;
    e["closed_right"] = s.closed_right;
    e["e"] = s.e;
    segs.push_back(e);
  }
  j["segments"] = segs;
  ojson bottom = ojson::array();
  for (const auto& i : pr.bottom) bottom.push_back(ojson::array({to_string(i.lo), to_string(i.hi)}));
  j["bottom"] = bottom;
  j["connected"] = pr.connected;
  if (pr.has_shift) {
    j["hat_alpha"] = rationals(pr.hat_alpha);
    j["breve_beta"] = rationals(pr.breve_beta);
  }
  return j;
}

ojson prime_profile_json(const HypergeometricDatum& d, u64 p) {
  const PrimeProfile pr = profile_at(d, p);
  ojson j;
  j["p"] = pr.p;
  j["e"] = pr.e;
  j["s"] = pr.s;
  j["w"] = pr.w;
  ojson bottom = ojson::array();
  for (auto [a, b] : pr.bottom) bottom.push_back(ojson::array({a, b}));
  j["bottom"] = bottom;
  j["connected"] = pr.connected;
  j["t"] = pr.t;
  if (pr.connected) {
    auto [ha, bb] = hat_breve(d, p);
    j["hat_alpha"] = rationals(ha);
    j["breve_beta"] = rationals(bb);
  }
  return j;
}

}  // namespace

std::vector<u64> parse_primes(const std::string& text) {
  std::vector<u64> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const u64 lo = parse_u64(text.substr(0, dots));
    const u64 hi = parse_u64(text.substr(dots + 2));
    if (lo > hi) throw ParseError("empty prime range " + text);
    if (hi > 100000) throw ParseError("prime range too large: " + text);
    return primes_in(lo, hi);
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const u64 p = parse_u64(item);
    if (!is_prime(p)) throw ParseError(item + " is not prime");
    out.push_back(p);
  }
  if (out.empty()) throw ParseError("no primes given");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hgc: hypergeometric sums, Euler factors and congruence checks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // default_val writes through to the bound variable, so every subcommand
  // keeps its own copy of options that share a name.
  std::string datum_text, out_path, catalog_name = "all", svg_path, csv_path, method = "padic";
  std::string verify_primes = "7..31", seq_primes = "7..67";
  std::string fixture_dir;
  std::vector<std::string> labels;
  u64 p = 0, bound = 101;
  unsigned long m = 0;
  int trunc_precision = 4, hp_precision = 6, e = 1, jobs = 1, bits = 256;
  bool allow_network = false, full = false;

  auto add_datum = [&](CLI::App* sub) {
    sub->add_option("--datum,-d", datum_text, "alpha=...; beta=...; lambda=... or H1,H2,H5..H8")->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out,-o", out_path, "write machine output here"); };

  auto* profile_cmd = app.add_subcommand("profile", "step function e(k), s, w, bottom interval");
  add_datum(profile_cmd);
  add_out(profile_cmd);
  profile_cmd->add_option("--p", p, "per-prime profile instead of the normalized one");
  profile_cmd->add_option("--svg", svg_path, "write the e(pk) step plot as SVG");
  profile_cmd->add_option("--csv", csv_path, "write the e(pk) steps as CSV");

  auto* truncate_cmd = app.add_subcommand("truncate", "truncated series F(alpha,beta;lambda)_m");
  add_datum(truncate_cmd);
  add_out(truncate_cmd);
  truncate_cmd->add_option("--m", m, "last index")->required();
  truncate_cmd->add_option("--p", p, "reduce p-adically");
  truncate_cmd->add_option("--precision,-N", trunc_precision, "p-adic digits")->capture_default_str();

  auto* hp_cmd = app.add_subcommand("hp", "finite field hypergeometric sum H_q");
  add_datum(hp_cmd);
  add_out(hp_cmd);
  hp_cmd->add_option("--p", p, "prime")->required();
  hp_cmd->add_option("--e", e, "q = p^e")->default_val(1);
  hp_cmd->add_option("--method", method, "padic, general or complex")
      ->check(CLI::IsMember({"padic", "general", "complex"}))
      ->default_val("padic");
  hp_cmd->add_option("--precision,-N", hp_precision, "p-adic digits")->capture_default_str();
  hp_cmd->add_option("--bits", bits, "starting MPFR precision for the complex oracle")->default_val(256);

  auto* euler_cmd = app.add_subcommand("euler", "Euler factor at a good prime");
  add_datum(euler_cmd);
  add_out(euler_cmd);
  euler_cmd->add_option("--p", p, "prime")->required();
  euler_cmd->add_flag("--full", full, "keep the degenerate eigenvalue when lambda = 1");

  auto* verify_cmd = app.add_subcommand("verify", "run catalog congruence checks");
  add_out(verify_cmd);
  verify_cmd->add_option("--catalog", catalog_name, "entry id, group or all")->default_val("all");
  verify_cmd->add_option("--primes", verify_primes, "a..b or a comma list")->capture_default_str();
  verify_cmd->add_option("--jobs,-j", jobs, "worker threads")->default_val(1)->check(CLI::Range(1, 256));
  verify_cmd->add_flag("--allow-network", allow_network, "fetch missing coefficients from LMFDB");
  verify_cmd->add_flag("--list", full, "list catalog entries and exit");

  auto* seq_cmd = app.add_subcommand("sequences", "the A_p, B_p and trace sequences");
  add_out(seq_cmd);
  seq_cmd->add_option("--primes", seq_primes, "a..b or a comma list")->capture_default_str();

  auto* fix_cmd = app.add_subcommand("fixtures", "newform coefficient fixtures");
  fix_cmd->require_subcommand(1);
  fix_cmd->add_option("--dir", fixture_dir, "fixture directory (default HGC_FIXTURES)");
  auto* fix_list = fix_cmd->add_subcommand("list", "show cached labels");
  auto* fix_check = fix_cmd->add_subcommand("check", "validate cached files");
  fix_check->add_option("--labels", labels, "labels to check")->delimiter(',');
  auto* fix_fetch = fix_cmd->add_subcommand("fetch", "download coefficients into the cache");
  fix_fetch->add_option("--labels", labels, "labels to fetch")->delimiter(',')->required();
  fix_fetch->add_option("--bound", bound, "largest prime")->capture_default_str();
  fix_fetch->add_flag("--allow-network", allow_network, "required: permits HTTP");
  add_out(fix_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& ex) {
    err << "hgc: " << ex.what() << "\n";
    return usage;
  }

  const Output sink{out, out_path};
  try {
    if (*profile_cmd) {
      const HypergeometricDatum d = parse_datum(datum_text);
      if (p) {
        sink.write(prime_profile_json(d, p).dump(1) + "\n");
        return ok;
      }
      const Profile pr = profile(make_datum(d.alpha, d.beta, d.lambda, true));
      if (!svg_path.empty()) export_profile_plot(pr, PlotFormat::svg, svg_path);
      if (!csv_path.empty()) export_profile_plot(pr, PlotFormat::csv, csv_path);
      sink.write(profile_json(pr).dump(1) + "\n");
      return ok;
    }
    if (*truncate_cmd) {
      const HypergeometricDatum d = parse_datum(datum_text);
      ojson j;
      j["m"] = m;
      if (p) {
        const Padic v = truncated_F_padic(d, m, p, trunc_precision);
        j["p"] = p;
        j["precision"] = v.precision();
        j["value"] = v.str();
      } else {
        j["value"] = to_string(truncated_F(d, m));
      }
      sink.write(j.dump(1) + "\n");
      return ok;
    }
    if (*hp_cmd) {
      const HypergeometricDatum d = parse_datum(datum_text);
      CharSumValue v;
      if (method == "complex") {
        ComplexOptions opt;
        opt.precision_bits = bits;
        v = hq_complex(d, p, e, opt);
      } else if (method == "general") {
        v = hq_general(d, p, e, hp_precision);
      } else {
        if (e != 1) throw ParseError("the Gamma_p method only covers q = p; use --method general");
        v = hp_padic(d, p, hp_precision);
      }
      ojson j;
      j["q"] = v.q;
      j["method"] = to_string(v.method);
      if (v.exact) j["value"] = to_string(*v.exact);
      if (v.padic) {
        j["padic"] = v.padic->str();
        j["precision"] = v.padic->precision();
      }
      if (v.method == CharSumMethod::complex_oracle) j["precision_bits"] = v.precision_bits;
      sink.write(j.dump(1) + "\n");
      return ok;
    }
    if (*euler_cmd) {
      const HypergeometricDatum d = parse_datum(datum_text);
      const EulerFactor f = full ? euler_factor(d, p, full_degree(d)) : reference_euler_factor(d, p);
      sink.write(poly_json(f.coefficients) + "\n");
      return ok;
    }
    if (*verify_cmd) {
      if (full) {
        ojson list = ojson::array();
        for (const auto& s : select_specs(catalog_name)) {
          ojson e;
          e["id"] = s.id;
          e["group"] = s.group;
          e["description"] = s.description;
          list.push_back(e);
        }
        sink.write(list.dump(1) + "\n");
        return ok;
      }
      const auto specs = select_specs(catalog_name);
      const auto primes = parse_primes(verify_primes);
      CoefficientCache cache(default_fixture_dir());
      std::unique_ptr<LmfdbClient> client;
      if (allow_network) client = std::make_unique<LmfdbClient>(std::make_shared<HttpTransport>());
      VerifyContext ctx{&cache, client.get()};
      const auto checks = run_checks(specs, primes, ctx, jobs);
      sink.write(report_json(checks));
      int fails = 0, inconc = 0;
      for (const auto& c : checks) {
        if (c.verdict == Verdict::fails) {
          ++fails;
          err << "fails: " << c.spec << " at p=" << c.p << " (lhs " << c.lhs << ", rhs " << c.rhs << ")\n";
        }
        if (c.verdict == Verdict::inconclusive) ++inconc;
      }
      err << checks.size() << " checks, " << fails << " failed, " << inconc << " inconclusive\n";
      return verdict_exit(checks);
    }
    if (*seq_cmd) {
      ojson j;
      ojson primes_j = ojson::array(), A = ojson::array(), B = ojson::array(), T = ojson::array();
      for (u64 q : parse_primes(seq_primes)) {
        if (q < 7) continue;
        primes_j.push_back(q);
        A.push_back(compute_Ap(q).get_si());
        B.push_back(compute_Bp(q).get_si());
        T.push_back(trace_combination(q).get_si());
      }
      j["primes"] = primes_j;
      j["A"] = A;
      j["B"] = B;
      j["trace"] = T;
      sink.write(j.dump(1) + "\n");
      return ok;
    }
    if (*fix_cmd) {
      CoefficientCache cache(fixture_dir.empty() ? default_fixture_dir() : fixture_dir);
      if (*fix_list) {
        std::vector<std::string> found;
        for (const auto& entry : std::filesystem::directory_iterator(cache.directory())) {
          const auto name = entry.path().filename().string();
          if (name.size() > 5 && name.ends_with(".json")) found.push_back(name.substr(0, name.size() - 5));
        }
        std::sort(found.begin(), found.end());
        ojson j = ojson::array();
        for (const auto& f : found) j.push_back(f);
        sink.write(j.dump(1) + "\n");
        return ok;
      }
      if (*fix_check) {
        if (labels.empty())
          for (const auto& entry : std::filesystem::directory_iterator(cache.directory()))
            if (entry.path().extension() == ".json") labels.push_back(entry.path().stem().string());
        std::sort(labels.begin(), labels.end());
        ojson j;
        for (const auto& l : labels) j[l] = cache.load(l).ap.size();
        sink.write(j.dump(1) + "\n");
        return ok;
      }
      if (*fix_fetch) {
        if (!allow_network) {
          err << "hgc: fixtures fetch needs --allow-network\n";
          return usage;
        }
        LmfdbClient client(std::make_shared<HttpTransport>());
        for (const auto& l : labels) {
          FormData f = client.fetch(l, bound, today_iso());
          cache.store(f);
          err << "stored " << cache.path_for(l) << "\n";
        }
        return ok;
      }
    }
  } catch (const PrecisionError& ex) {
    err << "hgc: inconclusive: " << ex.what() << "\n";
    return inconclusive;
  } catch (const ConsistencyError& ex) {
    err << "hgc: consistency failure: " << ex.what() << "\n";
    return failure;
  } catch (const Error& ex) {
    err << "hgc: " << ex.what() << "\n";
    return usage;
  } catch (const std::exception& ex) {
    err << "hgc: " << ex.what() << "\n";
    return usage;
  }
  return usage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hgc::cli
