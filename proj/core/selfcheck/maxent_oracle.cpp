#include "maxent_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hierq::oracle {

namespace {

constexpr double parity(unsigned x) { return (std::popcount(x) % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double entropy_bits(std::span<const double, 8> q) {
  double h = 0.0;
  for (double v : q) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

Table8 pairwise_maxent_binary3(std::span<const double, 8> p) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (unsigned x = 0; x < 8; ++x) {
    if (parity(x) > 0) {
      lo = std::max(lo, -p[x]);
    } else {
      hi = std::min(hi, p[x]);
    }
  }
  if (lo > hi) throw std::invalid_argument("pairwise_maxent_binary3: input has negative cells");

  auto at = [&](double t) {
    Table8 q{};
    for (unsigned x = 0; x < 8; ++x) q[x] = std::max(0.0, p[x] + t * parity(x));
    return q;
  };

  // d/dt H(p + t chi) = -sum_x chi(x) ln q(x); decreasing in t.
  auto slope = [&](double t) {
    const Table8 q = at(t);
    double s = 0.0;
    for (unsigned x = 0; x < 8; ++x) s -= parity(x) * std::log(q[x]);
    return s;
  };

  double a = lo;
  double b = hi;
  for (int it = 0; it < 200 && a < b; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (slope(mid) > 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return at(0.5 * (a + b));
}

double total_variation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("total_variation: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return 0.5 * d;
}

}  // namespace hierq::oracle
