// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/modforms.hpp"

#include <httplib.h>

#include <cstdio>
#include <cstdlib>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hgc/errors.hpp"
#include "hgc/padic.hpp"

namespace hgc {

using ojson = nlohmann::ordered_json;

int legendre(const Integer& a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw InvalidPrime("Legendre symbol needs an odd prime");
  const u64 r = reduce(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// ---- eta products ----

namespace {

using Series = std::vector<Integer>;

Series series_mul(const Series& a, const Series& b, int bound) {
  Series c(bound + 1, 0);
  for (int i = 0; i <= bound; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= bound; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// 1/a for a[0] = 1.
Series series_inv(const Series& a, int bound) {
  Series b(bound + 1, 0);
  b[0] = 1;
  for (int n = 1; n <= bound; ++n) {
    Integer s = 0;
    for (int i = 1; i <= n; ++i) s += a[i] * b[n - i];
    b[n] = -s;
  }
  return b;
}

// prod_{n >= 1} (1 - q^{m n})^r to q^bound.
Series eta_core(int m, int r, int bound) {
  Series base(bound + 1, 0);
  base[0] = 1;
  for (int n = 1; m * n <= bound; ++n) {
    Series f(bound + 1, 0);
    f[0] = 1;
    f[m * n] = -1;
    base = series_mul(base, f, bound);
  }
  if (r < 0) base = series_inv(base, bound);
  Series out(bound + 1, 0);
  out[0] = 1;
  for (int i = 0; i < std::abs(r); ++i) out = series_mul(out, base, bound);
  return out;
}

}  // namespace

QExpansion eta_expansion(const EtaProduct& e, int bound) {
  if (bound < 1) throw Error("expansion bound must be positive");
  QExpansion out;
  out.bound = bound;
  out.a.assign(bound + 1, 0);
  for (const auto& term : e.terms) {
    long weight24 = 0;
    for (auto [m, r] : term.factors) {
      if (m <= 0) throw Error("eta multiplier must be positive");
      weight24 += static_cast<long>(m) * r;
    }
    if (weight24 % 24) throw Error("eta product has a fractional leading q-power");
    const long shift = weight24 / 24;
    if (shift < 0) throw Error("eta product has a pole at infinity");
    if (shift > bound) continue;
    const int len = bound - static_cast<int>(shift);
    Series s(len + 1, 0);
    s[0] = 1;
    for (auto [m, r] : term.factors) s = series_mul(s, eta_core(m, r, len), len);
    for (int i = 0; i <= len; ++i) out.a[i + shift] += term.coefficient * s[i];
  }
  return out;
}

std::optional<EtaProduct> named_eta_product(const std::string& label) {
  if (label == "8.6.1.a") return EtaProduct{{{1, {{1, 8}, {4, 4}}}, {8, {{4, 12}}}}};
  if (label == "8.4.1.a") return EtaProduct{{{1, {{2, 4}, {4, 4}}}}};
  if (label == "24.2.1.a") return EtaProduct{{{1, {{2, 1}, {4, 1}, {6, 1}, {12, 1}}}}};
  if (label == "delta") return EtaProduct{{{1, {{1, 24}}}}};
  return std::nullopt;
}

// ---- fixtures ----

FormRef parse_label(const std::string& label) {
  FormRef ref;
  ref.label = label;
  int level = 0, weight = 0, chr = 0;
  char letter[8] = {0};
  if (std::sscanf(label.c_str(), "%d.%d.%d.%7s", &level, &weight, &chr, letter) != 4 || level <= 0 ||
      weight <= 0 || chr <= 0 || letter[0] < 'a' || letter[0] > 'z')
    throw ParseError("not a newform label N.k.c.x: " + label);
  ref.level = level;
  ref.weight = weight;
  return ref;
}

FormData parse_form_json(const std::string& text) {
  FormData f;
  try {
    auto j = nlohmann::json::parse(text);
    f.ref = parse_label(j.at("label").get<std::string>());
    f.ref.weight = j.at("weight").get<int>();
    f.ref.level = j.at("level").get<int>();
    f.source = j.at("source").get<std::string>();
    f.fetched = j.at("fetched").get<std::string>();
    for (auto& [key, value] : j.at("ap").items()) {
      const std::uint64_t p = std::stoull(key);
      if (!value.is_number_integer()) throw ParseError("a_" + key + " is not an integer");
      f.ap[p] = Integer(value.dump());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad fixture JSON: ") + e.what());
  }
  return f;
}

std::string form_json(const FormData& f) {
  ojson j;
  j["label"] = f.ref.label;
  j["weight"] = f.ref.weight;
  j["level"] = f.ref.level;
  j["source"] = f.source;
  j["fetched"] = f.fetched;
  ojson ap = ojson::object();
  for (const auto& [p, a] : f.ap) ap[std::to_string(p)] = ojson::parse(a.get_str());
  j["ap"] = ap;
  return j.dump(1) + "\n";
}

void check_deligne(const FormData& f) {
  for (const auto& [p, a] : f.ap) {
    // a^2 <= 4 p^(k-1)
    const Integer bound = 4 * ipow(Integer(static_cast<unsigned long>(p)), f.ref.weight - 1);
    if (a * a > bound)
      throw ConsistencyError(f.ref.label + ": a_" + std::to_string(p) + " = " + a.get_str() +
                             " violates the Deligne bound");
  }
}

bool CoefficientCache::has(const std::string& label) const {
  std::lock_guard<std::mutex> lock(mu_);
  return loaded_.count(label) || std::filesystem::exists(path_for(label));
}

std::string CoefficientCache::path_for(const std::string& label) const {
  return (std::filesystem::path(dir_) / (label + ".json")).string();
}

const FormData& CoefficientCache::load(const std::string& label) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = loaded_.find(label);
  if (it != loaded_.end()) return it->second;
  std::ifstream in(path_for(label));
  if (!in) throw MissingFixture("no fixture for " + label + " in " + dir_);
  std::stringstream ss;
  ss << in.rdbuf();
  FormData f = parse_form_json(ss.str());
  if (f.ref.label != label) throw ParseError("fixture " + path_for(label) + " holds " + f.ref.label);
  check_deligne(f);
  return loaded_.emplace(label, std::move(f)).first->second;
}

void CoefficientCache::store(const FormData& f) {
  check_deligne(f);
  std::lock_guard<std::mutex> lock(mu_);
  std::filesystem::create_directories(dir_);
  const std::string target = path_for(f.ref.label);
  const std::string tmp = target + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << form_json(f);
    if (!out) throw Error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, target);
  loaded_[f.ref.label] = f;
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("HGC_FIXTURES"); env && *env) return env;
  return HGC_DEFAULT_FIXTURES;
}

// ---- network ----

std::string HttpTransport::get(const std::string& host, const std::string& path) {
  httplib::Client client(host);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res) throw TransportError("GET " + host + path + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw TransportError("GET " + host + path + " returned HTTP " + std::to_string(res->status));
  return res->body;
}

std::string RecordedTransport::get(const std::string& host, const std::string& path) {
  requests_.push_back(path);
  auto it = responses_.find(path);
  if (it == responses_.end()) throw TransportError("no recorded response for " + host + path);
  return it->second;
}

std::string LmfdbClient::current_label(const std::string& label) {
  if (label == "32.3.31.a") return "32.3.c.a";
  FormRef ref = parse_label(label);
  int chr = 0;
  char letter[8] = {0};
  std::sscanf(label.c_str(), "%*d.%*d.%d.%7s", &chr, letter);
  if (chr != 1) throw NotApplicable("no character orbit mapping for " + label);
  return std::to_string(ref.level) + "." + std::to_string(ref.weight) + ".a." + letter;
}

std::string LmfdbClient::api_path(const std::string& label) {
  return "/api/mf_newforms/?label=" + current_label(label) + "&_format=json&_fields=label,dim,weight,level,traces";
}

FormData LmfdbClient::fetch(const std::string& label, std::uint64_t max_prime, const std::string& fetched_date) {
  const std::string body = transport_->get(host_, api_path(label));
  FormData f;
  f.ref = parse_label(label);
  f.fetched = fetched_date;
  std::string cur = current_label(label);
  for (auto& c : cur)
    if (c == '.') c = '/';
  f.source = host_ + "/ModularForm/GL2/Q/holomorphic/" + cur + "/";
  try {
    auto j = nlohmann::json::parse(body);
    const auto& data = j.at("data");
    if (data.size() != 1) throw TransportError("expected one record for " + label);
    const auto& rec = data.at(0);
    if (rec.at("dim").get<int>() != 1)
      throw NotApplicable(label + " has a coefficient field of degree > 1; a_p is not in the trace vector");
    if (rec.at("weight").get<int>() != f.ref.weight || rec.at("level").get<int>() != f.ref.level)
      throw ConsistencyError("record for " + label + " has mismatched level or weight");
    const auto& traces = rec.at("traces");
    for (std::uint64_t p : primes_in(2, max_prime)) {
      if (p > traces.size()) throw TransportError("trace vector too short for p=" + std::to_string(p));
      f.ap[p] = Integer(traces.at(p - 1).dump());
    }
  } catch (const nlohmann::json::exception& e) {
    throw TransportError(std::string("unexpected API response: ") + e.what());
  }
  check_deligne(f);
  return f;
}

std::string today_iso() {
  const auto days = std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now());
  const std::chrono::year_month_day ymd{days};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

Integer fetch_ap(const FormRef& ref, std::uint64_t p, CoefficientCache& cache, LmfdbClient* client) {
  if (p == 1) return 1;
  if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  if (cache.has(ref.label)) {
    const FormData& f = cache.load(ref.label);
    auto it = f.ap.find(p);
    if (it != f.ap.end()) return it->second;
  }
  if (!client) throw MissingFixture("a_" + std::to_string(p) + " of " + ref.label + " is not cached and network access is off");
  FormData f = client->fetch(ref.label, std::max<std::uint64_t>(p, 101), today_iso());
  cache.store(f);
  auto it = f.ap.find(p);
  if (it == f.ap.end()) throw MissingFixture("a_" + std::to_string(p) + " of " + ref.label + " unavailable");
  return it->second;
}

}  // namespace hgc
