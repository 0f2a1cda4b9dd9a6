#pragma once

// Empirical linearity harness: seeded random inputs on a doubling length
// grid, wall-clock medians, and the time(2n)/time(n) ratios that the
// acceptance gate bounds. Deterministic for a fixed seed so recorded
// numbers reproduce.

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "odag/conjugacy.hpp"
#include "odag/twisted.hpp"

namespace odag {

// Freely reduced pseudo-random word of exactly n letters: each step draws
// uniformly from the three letters that do not cancel the previous one.
inline Word random_reduced_word(long long n, std::mt19937_64& rng) {
  Word w;
  long long last = -1;  // letter code 0 x, 1 x^-1, 2 y, 3 y^-1
  for (long long i = 0; i < n; ++i) {
    long long c;
    if (last < 0) {
      c = static_cast<long long>(rng() % 4);
    } else {
      c = static_cast<long long>(rng() % 3);
      if (c >= (last ^ 1)) ++c;  // skip the inverse of the previous letter
    }
    w.push(c < 2 ? Gen::X : Gen::Y, c % 2 == 0 ? 1 : -1);
    last = c;
  }
  return w;
}

struct BenchPoint {
  long long n = 0;
  double micros = 0;   // best-of-samples wall time for one call
  bool verdict = false;  // decision ops only
};

struct BenchResult {
  std::string op;
  std::vector<BenchPoint> points;
  std::vector<double> ratios;  // micros(2n)/micros(n) over doubling steps
  double mean_ratio = 0;
};

namespace detail {

template <class F>
double time_once_us(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(t1 - t0).count();
}

template <class F>
double best_of(int samples, F&& f) {
  double best = time_once_us(f);
  for (int i = 1; i < samples; ++i) best = std::min(best, time_once_us(f));
  return best;
}

}  // namespace detail

// op: "nf" (geodesic of a random word), "tcp-phi" (decision on a related
// pair built from a random phi-cyclic permutation), or "cp" (conjugacy of a
// word against a conjugate of itself).
inline BenchResult bench(const std::string& op,
                         const std::vector<long long>& grid,
                         const GroupParams& p, unsigned long long seed,
                         int samples = 3) {
  BenchResult res;
  res.op = op;
  std::mt19937_64 rng(seed);
  for (long long n : grid) {
    Word u = random_reduced_word(n, rng);
    BenchPoint pt;
    pt.n = n;
    if (op == "nf") {
      Word out;
      pt.micros = detail::best_of(samples, [&] { out = geodesic(u, p); });
      pt.verdict = out.length() <= n;
    } else if (op == "tcp-phi") {
      Word v = phi_cyclic_prefix(u, static_cast<long long>(rng() % (n + 1)))
                   .first;
      Decision d;
      pt.micros = detail::best_of(samples, [&] { d = tcp_phi(u, v, p); });
      pt.verdict = d.verdict;
    } else if (op == "cp") {
      Word g = random_reduced_word(8, rng);
      Word v = concat(invert(g), u, g);
      Decision d;
      pt.micros = detail::best_of(samples, [&] { d = conjugate(u, v, p); });
      pt.verdict = d.verdict;
    } else {
      throw param_error("bench: unknown op " + op);
    }
    res.points.push_back(pt);
  }
  for (size_t i = 1; i < res.points.size(); ++i) {
    if (res.points[i].n == 2 * res.points[i - 1].n &&
        res.points[i - 1].micros > 0)
      res.ratios.push_back(res.points[i].micros / res.points[i - 1].micros);
  }
  for (double r : res.ratios) res.mean_ratio += r;
  if (!res.ratios.empty()) res.mean_ratio /= static_cast<double>(res.ratios.size());
  return res;
}

inline std::vector<long long> default_bench_grid() {
  std::vector<long long> g;
  for (long long n = 10'000; n <= 640'000; n *= 2) g.push_back(n);
  g.push_back(1'000'000);
  return g;
}

}  // namespace odag
