#include "bps/sweep.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "bps/bigpoly.hpp"
#include "bps/errors.hpp"
#include "json.hpp"

namespace bps {

namespace {

LengthVector vector_of(const std::vector<Integer>& entries) {
  std::vector<Rational> q;
  q.reserve(entries.size());
  for (const Integer& e : entries) q.emplace_back(e);
  return LengthVector(std::move(q));
}

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void fill_poincare_fields(ChamberReport& rep, const LengthVector& l) {
  const SpaceParams p(1, 1, l);
  rep.poincare_x = poincare_polynomial_X(p).str();
  rep.betti_sum_e = betti_sum_E(l, 1).convert_to<long long>();
  rep.pairing_perfect = is_signed_permutation(pairing_matrix(p));
}

}  // namespace

std::string syzord_cache_key(const std::string& chamber_id, int b) {
  return chamber_id + "|b=" + std::to_string(b);
}

std::map<std::string, int> load_syzord_cache(const std::string& path) {
  std::map<std::string, int> cache;
  std::ifstream in(path);
  if (!in) return cache;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    for (auto& [key, val] : j.items()) cache[key] = val.get<int>();
  } catch (const nlohmann::json::exception&) {
    cache.clear();  // unreadable cache = no cache
  }
  return cache;
}

void save_syzord_cache(const std::string& path,
                       const std::map<std::string, int>& cache) {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [key, val] : cache) j[key] = val;
  std::ofstream out(path);
  if (!out) throw Error("cannot write cache file " + path);
  out << j.dump(2) << '\n';
}

ChamberReport analyze_lengths(const LengthVector& l, int a, int b,
                              const GBLimits& lim) {
  const auto t0 = std::chrono::steady_clock::now();
  const Chamber c = chamber_of(l);
  ChamberReport rep;
  rep.chamber_id = c.id();
  rep.representative = l.str();
  rep.r = l.r();
  rep.mu = l.mu();
  rep.syzord_by_b[b] = ht_syzygy_order(l, b, lim);
  rep.conjecture_ok = rep.syzord_by_b[b] == rep.mu - 1;
  const SpaceParams p(a, b, l);
  rep.poincare_x = poincare_polynomial_X(p).str();
  rep.betti_sum_e = betti_sum_E(l, a).convert_to<long long>();
  rep.pairing_perfect = is_signed_permutation(pairing_matrix(p));
  rep.millis = elapsed_ms(t0);
  return rep;
}

SweepResult verify_conjecture_sweep(const SweepOptions& opt) {
  const int r = opt.r;
  const int bound = opt.entry_bound > 0 ? opt.entry_bound : r + 1;
  const ChamberEnumeration en = enumerate_chambers(r, bound);
  const std::map<std::string, int> cache =
      opt.cache_path.empty() ? std::map<std::string, int>{}
                             : load_syzord_cache(opt.cache_path);

  const std::size_t n = en.chambers.size();
  std::vector<ChamberReport> reports(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      const Chamber& c = en.chambers[i];
      ChamberReport rep;
      rep.chamber_id = c.id();
      rep.r = r;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const LengthVector l = vector_of(c.representative);
        rep.representative = l.str();
        rep.mu = l.mu();
        bool ok = !opt.bs.empty();
        for (int b : opt.bs) {
          const auto hit = cache.find(syzord_cache_key(c.id(), b));
          const int s = hit != cache.end() ? hit->second
                                           : ht_syzygy_order(l, b, opt.limits);
          rep.syzord_by_b[b] = s;
          ok = ok && s == rep.mu - 1;
        }
        rep.conjecture_ok = ok;
        if (opt.with_poincare) fill_poincare_fields(rep, l);
      } catch (const ResourceError& ex) {
        rep.error = std::string("resource: ") + ex.what();
      } catch (const std::exception& ex) {
        rep.error = std::string("error: ") + ex.what();
      }
      rep.millis = elapsed_ms(t0);
      reports[i] = std::move(rep);
    }
  };

  int nthreads = opt.threads == 0
                     ? static_cast<int>(std::thread::hardware_concurrency())
                     : opt.threads;
  if (nthreads < 1) nthreads = 1;
  if (n > 0 && static_cast<std::size_t>(nthreads) > n)
    nthreads = static_cast<int>(n);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  SweepResult res;
  res.reports = std::move(reports);
  res.stabilized = en.stabilized;
  for (const ChamberReport& rep : res.reports) {
    if (!rep.error.empty())
      ++res.errors;
    else if (!rep.conjecture_ok)
      ++res.violations;
  }

  if (!opt.cache_path.empty()) {
    std::map<std::string, int> merged = cache;
    for (const ChamberReport& rep : res.reports) {
      if (!rep.error.empty()) continue;
      for (auto& [b, s] : rep.syzord_by_b)
        merged[syzord_cache_key(rep.chamber_id, b)] = s;
    }
    save_syzord_cache(opt.cache_path, merged);
  }
  return res;
}

std::string SweepResult::summary() const {
  const std::size_t total = reports.size();
  const std::size_t ok = total - violations - errors;
  std::ostringstream os;
  os << ok << "/" << total << " chambers satisfy syzord = mu-1";
  if (errors > 0) os << " (" << errors << " failed)";
  return os.str();
}

}  // namespace bps
