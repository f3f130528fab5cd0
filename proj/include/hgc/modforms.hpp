// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgc/rational.hpp"

namespace hgc {

// Legendre symbol by Euler's criterion; p an odd prime.
int legendre(const Integer& a, std::uint64_t p);

struct EtaSummand {
  Integer coefficient;
  std::vector<std::pair<int, int>> factors;  // (m, r) for eta(m z)^r
};

struct EtaProduct {
  std::vector<EtaSummand> terms;
};

struct QExpansion {
  std::vector<Integer> a;  // a[0..bound]
  int bound = 0;
  const Integer& operator[](int n) const { return a.at(n); }
};

QExpansion eta_expansion(const EtaProduct& e, int bound);
// Eta products for 8.6.1.a, 8.4.1.a, 24.2.1.a and "delta".
std::optional<EtaProduct> named_eta_product(const std::string& label);

struct FormRef {
  std::string label;  // N.k.c.x
  int weight = 0;
  int level = 0;
};
FormRef parse_label(const std::string& label);

struct FormData {
  FormRef ref;
  std::string source;
  std::string fetched;
  std::map<std::uint64_t, Integer> ap;
};

FormData parse_form_json(const std::string& text);
std::string form_json(const FormData& f);
// Throws ConsistencyError when some |a_p| exceeds 2 p^((k-1)/2).
void check_deligne(const FormData& f);

// Source of raw API responses.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::string get(const std::string& host, const std::string& path) = 0;
};

class HttpTransport : public Transport {
 public:
  std::string get(const std::string& host, const std::string& path) override;
};

// Canned responses keyed by path, for tests and offline replay.
class RecordedTransport : public Transport {
 public:
  void add(const std::string& path, std::string body) { responses_[path] = std::move(body); }
  std::string get(const std::string& host, const std::string& path) override;
  const std::vector<std::string>& requests() const { return requests_; }

 private:
  std::map<std::string, std::string> responses_;
  std::vector<std::string> requests_;
};

class LmfdbClient {
 public:
  explicit LmfdbClient(std::shared_ptr<Transport> transport, std::string host = "https://www.lmfdb.org")
      : transport_(std::move(transport)), host_(std::move(host)) {}
  // Newform label in the current LMFDB scheme (character orbit letter).
  static std::string current_label(const std::string& label);
  static std::string api_path(const std::string& label);
  // Only forms with rational coefficients can be read off the trace vector.
  FormData fetch(const std::string& label, std::uint64_t max_prime, const std::string& fetched_date);

 private:
  std::shared_ptr<Transport> transport_;
  std::string host_;
};

class CoefficientCache {
 public:
  explicit CoefficientCache(std::string directory) : dir_(std::move(directory)) {}
  const std::string& directory() const { return dir_; }
  bool has(const std::string& label) const;
  const FormData& load(const std::string& label) const;
  // Validates, writes to a temporary file and renames it into place.
  void store(const FormData& f);
  std::string path_for(const std::string& label) const;

 private:
  std::string dir_;
  mutable std::mutex mu_;
  mutable std::map<std::string, FormData> loaded_;
};

// UTC date as YYYY-MM-DD.
std::string today_iso();

// HGC_FIXTURES if set, else the fixtures directory of the source tree.
std::string default_fixture_dir();

// Cached a_p; on a miss fetches through client when one is given, else
// throws MissingFixture.
Integer fetch_ap(const FormRef& ref, std::uint64_t p, CoefficientCache& cache, LmfdbClient* client = nullptr);

}  // namespace hgc
